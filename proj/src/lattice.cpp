#include "levibranch/lattice.hpp"

#include <sstream>

#include "levibranch/errors.hpp"

namespace levibranch {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    std::int64_t num = std::stoll(text.substr(0, slash));
    std::int64_t den = std::stoll(text.substr(slash + 1));
    if (den == 0) throw ConfigError("zero denominator in rational '" + text + "'");
    return Rational(num, den);
  } catch (const std::logic_error&) {
    throw ConfigError("malformed rational '" + text + "'");
  }
}

Coweight parse_coweight(const std::string& text, int rank) {
  std::vector<int> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int x = std::stoi(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
      coords.push_back(x);
    } catch (const std::logic_error&) {
      throw ConfigError("malformed coweight '" + text + "'");
    }
  }
  if (static_cast<int>(coords.size()) != rank)
    throw ConfigError("coweight '" + text + "' has " + std::to_string(coords.size()) +
                      " coordinates, expected " + std::to_string(rank));
  return Coweight::from(coords);
}

Coweight QVec::to_coweight() const {
  Coweight v(rank_);
  for (int i = 0; i < rank_; ++i) {
    if (c_[i].denominator() != 1) throw InternalError("QVec::to_coweight on a non-integral vector");
    v[i] = static_cast<int>(c_[i].numerator());
  }
  return v;
}

}  // namespace levibranch
