#include "tropbasis/element_set.hpp"

#include <sstream>

#include "tropbasis/errors.hpp"

namespace trop {

ElementSet ElementSet::of(std::initializer_list<int> elems) {
  return from_elements(std::vector<int>(elems));
}

ElementSet ElementSet::from_elements(const std::vector<int>& elems) {
  std::uint64_t bits = 0;
  for (int e : elems) {
    if (e < 1 || e > kMaxGroundSize) {
      throw InvalidInput("out-of-range",
                         "element " + std::to_string(e) + " outside 1.." +
                             std::to_string(kMaxGroundSize));
    }
    bits |= std::uint64_t{1} << (e - 1);
  }
  return ElementSet(bits);
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string ElementSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace trop
