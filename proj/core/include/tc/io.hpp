#pragma once

// Text formats shared by the command-line tool and the tests.

#include <string>
#include <vector>

#include "tc/fol/formula.hpp"
#include "tc/stability.hpp"

namespace tc::io {

/// Whole file as a string; throws std::runtime_error if it cannot be read.
std::string read_file(const std::string& path);

/// One entry per line: `<element> <sign>` with sign `+` or `-`. The element
/// is a decimal natural or a sentence, which stands for its formula code.
/// A line `repeat:` starts the periodic tail. Blank lines and lines starting
/// with `#` are skipped.
stability::StreamSpec parse_stream(const std::string& text);

/// One sentence per non-blank, non-comment line.
std::vector<fol::Sentence> parse_theory(const std::string& text);

}  // namespace tc::io
