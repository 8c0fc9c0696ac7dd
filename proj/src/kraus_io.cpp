#include "qcap/kraus_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace qcap {

namespace {

using nlohmann::json;

double number_at(const json& node, const std::string& where) {
    if (!node.is_number()) throw KrausFormatError(where + ": expected a number");
    return node.get<double>();
}

}  // namespace

QuantumChannel load_kraus(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw KrausFormatError(std::string("kraus json: ") + e.what());
    }
    if (!doc.is_object()) throw KrausFormatError("kraus json: top level must be an object");
    for (const char* field : {"din", "dout", "kraus"}) {
        if (!doc.contains(field)) {
            throw KrausFormatError(std::string("kraus json: missing field '") + field + "'");
        }
    }
    if (!doc["din"].is_number_unsigned() || !doc["dout"].is_number_unsigned()) {
        throw KrausFormatError("kraus json: din/dout must be positive integers");
    }
    const std::size_t din = doc["din"].get<std::size_t>();
    const std::size_t dout = doc["dout"].get<std::size_t>();
    const json& list = doc["kraus"];
    if (!list.is_array() || list.empty()) {
        throw KrausFormatError("kraus json: 'kraus' must be a non-empty array of matrices");
    }

    std::vector<ComplexMatrix> kraus;
    kraus.reserve(list.size());
    for (std::size_t k = 0; k < list.size(); ++k) {
        const json& mat = list[k];
        const std::string where = "kraus[" + std::to_string(k) + "]";
        if (!mat.is_array() || mat.size() != dout) {
            throw KrausFormatError(where + ": expected " + std::to_string(dout) + " rows");
        }
        std::vector<Complex> entries;
        entries.reserve(dout * din);
        for (std::size_t r = 0; r < dout; ++r) {
            const json& row = mat[r];
            const std::string rw = where + "[" + std::to_string(r) + "]";
            if (!row.is_array() || row.size() != din) {
                throw KrausFormatError(rw + ": expected " + std::to_string(din) + " columns");
            }
            for (std::size_t c = 0; c < din; ++c) {
                const json& pair = row[c];
                const std::string pw = rw + "[" + std::to_string(c) + "]";
                if (!pair.is_array() || pair.size() != 2) {
                    throw KrausFormatError(pw + ": expected a [re, im] pair");
                }
                entries.emplace_back(number_at(pair[0], pw + "[0]"), number_at(pair[1], pw + "[1]"));
            }
        }
        kraus.emplace_back(dout, din, std::move(entries));
    }
    return QuantumChannel(din, dout, std::move(kraus));
}

QuantumChannel load_kraus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open kraus file: " + path);
    return load_kraus(in);
}

void save_kraus(const QuantumChannel& ch, std::ostream& out) {
    json list = json::array();
    for (const ComplexMatrix& k : ch.kraus()) {
        json mat = json::array();
        for (std::size_t r = 0; r < k.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < k.cols(); ++c) {
                row.push_back({k(r, c).real(), k(r, c).imag()});
            }
            mat.push_back(std::move(row));
        }
        list.push_back(std::move(mat));
    }
    const json doc = {{"din", ch.din()}, {"dout", ch.dout()}, {"kraus", std::move(list)}};
    out << doc.dump(2) << '\n';
}

void save_kraus_file(const QuantumChannel& ch, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output path: " + path);
    save_kraus(ch, out);
    out.flush();
    if (!out) throw IoError("failed writing kraus file: " + path);
}

}  // namespace qcap
