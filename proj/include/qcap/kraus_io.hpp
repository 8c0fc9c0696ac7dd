#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qcap/channel.hpp"

namespace qcap {

/// Filesystem-level failure (missing file, unwritable path).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed Kraus JSON; message carries the offending field or parse
/// position.
struct KrausFormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Kraus JSON schema: {"din": n, "dout": m, "kraus": [matrix, ...]},
/// matrix = dout rows of din [re, im] pairs, numbers as IEEE doubles in
/// decimal text. Channel validation (trace preservation) applies on load.
QuantumChannel load_kraus(std::istream& in);
QuantumChannel load_kraus_file(const std::string& path);

void save_kraus(const QuantumChannel& ch, std::ostream& out);
void save_kraus_file(const QuantumChannel& ch, const std::string& path);

}  // namespace qcap
