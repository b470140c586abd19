#include "frobsys/ring.hpp"

#include <set>
#include <sstream>

namespace frobsys {

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

Ring::Ring(std::uint32_t p, std::vector<std::string> names, MonomialOrder order,
           std::size_t block, Caps caps)
    : field_(p), names_(std::move(names)), order_(order), block_(block), caps_(caps) {}

RingPtr Ring::make(std::uint32_t p, std::vector<std::string> names, MonomialOrder order,
                   std::size_t block, Caps caps) {
  if (names.empty()) throw DomainError("a ring needs at least one variable");
  if (names.size() > kMaxVars)
    throw UnsupportedError("at most " + std::to_string(kMaxVars) + " variables are supported");
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) throw DomainError("duplicate variable names");
  if (order == MonomialOrder::kElimination && (block == 0 || block >= names.size()))
    throw DomainError("elimination block must be a proper nonempty prefix");
  return RingPtr(new Ring(p, std::move(names), order, block, caps));
}

int Ring::compare(const Monomial& a, const Monomial& b) const {
  switch (order_) {
    case MonomialOrder::kGrevlex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (std::size_t i = names_.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    case MonomialOrder::kLex:
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case MonomialOrder::kElimination: {
      int c = grevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return grevlex_range(a, b, block_, names_.size());
    }
  }
  return 0;
}

bool Ring::same_as(const Ring& other) const {
  return this == &other || (field_ == other.field_ && names_ == other.names_ &&
                            order_ == other.order_ && block_ == other.block_);
}

RingPtr Ring::with_front_block(const std::vector<std::string>& extra) const {
  std::vector<std::string> names = extra;
  names.insert(names.end(), names_.begin(), names_.end());
  return make(characteristic(), std::move(names), MonomialOrder::kElimination, extra.size(),
              caps_);
}

RingPtr Ring::permuted(const std::vector<std::size_t>& perm) const {
  std::vector<std::string> names;
  names.reserve(perm.size());
  for (std::size_t i : perm) names.push_back(names_.at(i));
  return make(characteristic(), std::move(names), MonomialOrder::kGrevlex, 0, caps_);
}

RingPtr Ring::with_caps(Caps caps) const {
  return make(characteristic(), names_, order_, block_, caps);
}

std::string Ring::describe() const {
  std::ostringstream os;
  os << "F_" << characteristic() << "[";
  for (std::size_t i = 0; i < names_.size(); ++i) os << (i ? "," : "") << names_[i];
  os << "]";
  return os.str();
}

void require_same_ring(const Ring& a, const Ring& b, const char* what) {
  if (!a.same_as(b))
    throw StructuralError(std::string(what) + ": ring mismatch (" + a.describe() + " vs " +
                          b.describe() + ")");
}

}  // namespace frobsys
