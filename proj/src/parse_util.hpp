#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxamida::detail {

inline std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) tokens.push_back(token);
  return tokens;
}

inline std::vector<int> parse_csv_ints(const std::string& text, const char* what) {
  std::vector<int> values;
  for (const std::string& token : split_csv(text)) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": not an integer: '" + token + "'");
    }
    while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
    if (used != token.size())
      throw std::invalid_argument(std::string(what) + ": trailing junk in '" + token + "'");
    values.push_back(value);
  }
  if (values.empty()) throw std::invalid_argument(std::string(what) + ": empty input");
  return values;
}

}  // namespace coxamida::detail
