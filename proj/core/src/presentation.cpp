#include "trank/presentation.hpp"

#include <set>
#include <stdexcept>

namespace trank {

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
  std::set<std::string_view> seen;
  for (const std::string& name : generators_) {
    if (name.empty()) throw std::invalid_argument("generator name must be nonempty");
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate generator name '" + name + "'");
  }
  relators_.reserve(relators.size());
  for (const Word& r : relators) {
    if (r.max_gen() >= static_cast<int>(generators_.size()))
      throw std::invalid_argument("relator uses a generator index out of range");
    relators_.push_back(cyclic_reduce(r).first);
  }
}

int Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::string Presentation::to_text() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i > 0) out += ", ";
    out += generators_[i];
  }
  out += " |";
  for (std::size_t k = 0; k < relators_.size(); ++k) {
    out += k == 0 ? " " : ", ";
    out += trank::to_text(relators_[k], generators_);
  }
  out += ">";
  return out;
}

}  // namespace trank
