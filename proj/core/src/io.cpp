#include "tc/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tc/fol/encoding.hpp"
#include "tc/fol/syntax.hpp"

namespace tc::io {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class F>
void for_each_line(const std::string& text, F&& f) {
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    f(line, number);
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

stability::StreamSpec parse_stream(const std::string& text) {
  stability::StreamSpec spec;
  bool in_tail = false;
  for_each_line(text, [&](const std::string& line, std::size_t number) {
    auto where = "line " + std::to_string(number) + ": ";
    if (line == "repeat:") {
      if (in_tail) throw std::invalid_argument(where + "second repeat:");
      in_tail = true;
      return;
    }
    auto cut = line.find_last_of(" \t");
    if (cut == std::string::npos) throw std::invalid_argument(where + "expected <element> <sign>");
    std::string sign = line.substr(cut + 1);
    std::string element = trim(line.substr(0, cut));
    if (sign != "+" && sign != "-") throw std::invalid_argument(where + "sign must be + or -");
    Natural value;
    if (auto n = parse_natural(element)) value = *n;
    else value = fol::formula_code(fol::parse_formula(element));
    (in_tail ? spec.tail : spec.prefix).push_back({value, sign == "+"});
  });
  return spec;
}

std::vector<fol::Sentence> parse_theory(const std::string& text) {
  std::vector<fol::Sentence> out;
  for_each_line(text, [&](const std::string& line, std::size_t number) {
    auto f = fol::parse_formula(line);
    if (!fol::is_closed(f)) throw std::invalid_argument("line " + std::to_string(number) + ": not a sentence");
    out.push_back(f);
  });
  return out;
}

}  // namespace tc::io
