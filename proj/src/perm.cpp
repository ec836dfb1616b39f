#include "qcs/perm.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace qcs {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::degree_mismatch: return "DegreeMismatch";
      case ErrorKind::out_of_range: return "OutOfRange";
      case ErrorKind::not_a_permutation: return "NotAPermutation";
      case ErrorKind::invalid_structure: return "InvalidStructure";
      case ErrorKind::not_left_nondegenerate: return "NotLeftNonDegenerate";
      case ErrorKind::not_nondegenerate: return "NotNonDegenerate";
      case ErrorKind::not_regular: return "NotRegular";
      case ErrorKind::not_invariant: return "NotInvariant";
      case ErrorKind::quotient_not_qcycle_set: return "QuotientNotQCycleSet";
      case ErrorKind::ill_defined: return "IllDefined";
      case ErrorKind::budget_exceeded: return "BudgetExceeded";
      case ErrorKind::invalid_pair: return "InvalidPair";
      case ErrorKind::not_cycle_set: return "NotCycleSet";
      case ErrorKind::not_a_group: return "NotAGroup";
      case ErrorKind::not_endomorphism: return "NotEndomorphism";
      case ErrorKind::not_left_quasi_normal: return "NotLeftQuasiNormal";
      case ErrorKind::invalid_covering: return "InvalidCovering";
      case ErrorKind::not_automorphism: return "NotAutomorphism";
      case ErrorKind::compatibility_failed: return "CompatibilityFailed";
      case ErrorKind::cap_exceeded: return "CapExceeded";
      case ErrorKind::parse_error: return "ParseError";
    }
    return "Unknown";
  }

  bool is_bijection(std::span<point_type const> images) noexcept {
    std::vector<bool> seen(images.size(), false);
    for (auto v : images) {
      if (v >= images.size() || seen[v]) {
        return false;
      }
      seen[v] = true;
    }
    return true;
  }

  Perm::Perm(std::vector<point_type> images) : _images(std::move(images)) {
    if (!is_bijection(_images)) {
      std::ostringstream oss;
      oss << "image sequence [";
      for (std::size_t i = 0; i < _images.size(); ++i) {
        oss << (i ? "," : "") << _images[i];
      }
      oss << "] is not a bijection";
      throw Error(ErrorKind::not_a_permutation, oss.str());
    }
  }

  Perm Perm::identity(std::size_t n) {
    std::vector<point_type> im(n);
    std::iota(im.begin(), im.end(), point_type(0));
    return Perm(std::move(im));
  }

  Perm Perm::from_cycles(
      std::size_t                                              n,
      std::initializer_list<std::initializer_list<point_type>> cycles) {
    std::vector<point_type> im(n);
    std::iota(im.begin(), im.end(), point_type(0));
    for (auto const& cyc : cycles) {
      std::vector<point_type> c(cyc);
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= n) {
          throw Error(ErrorKind::out_of_range, "cycle entry exceeds degree");
        }
        im[c[i]] = c[(i + 1) % c.size()];
      }
    }
    return Perm(std::move(im));
  }

  bool Perm::is_identity() const noexcept {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::size_t> Perm::cycle_type() const {
    std::vector<std::size_t> result;
    std::vector<bool>        seen(_images.size(), false);
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::size_t len = 0;
      for (auto j = i; !seen[j]; j = _images[j]) {
        seen[j] = true;
        ++len;
      }
      result.push_back(len);
    }
    std::sort(result.begin(), result.end(), std::greater<>());
    return result;
  }

  Perm compose(Perm const& p, Perm const& q) {
    if (p.degree() != q.degree()) {
      throw Error(ErrorKind::degree_mismatch,
                  "cannot compose permutations of degree "
                      + std::to_string(p.degree()) + " and "
                      + std::to_string(q.degree()));
    }
    std::vector<point_type> im(p.degree());
    for (std::size_t i = 0; i < im.size(); ++i) {
      im[i] = p(q(static_cast<point_type>(i)));
    }
    return Perm(std::move(im));
  }

  Perm inverse(Perm const& p) {
    std::vector<point_type> im(p.degree());
    for (std::size_t i = 0; i < im.size(); ++i) {
      im[p(static_cast<point_type>(i))] = static_cast<point_type>(i);
    }
    return Perm(std::move(im));
  }

  std::size_t order(Perm const& p) {
    std::size_t result = 1;
    for (auto len : p.cycle_type()) {
      result = std::lcm(result, len);
    }
    return result;
  }

  std::ostream& operator<<(std::ostream& os, Perm const& p) {
    bool any = false;
    std::vector<bool> seen(p.degree(), false);
    for (point_type i = 0; i < p.degree(); ++i) {
      if (seen[i] || p(i) == i) {
        continue;
      }
      os << '(';
      for (auto j = i; !seen[j]; j = p(j)) {
        seen[j] = true;
        os << (j == i ? "" : " ") << j;
      }
      os << ')';
      any = true;
    }
    if (!any) {
      os << "()";
    }
    return os;
  }

  std::size_t PermHash::operator()(Perm const& p) const noexcept {
    std::size_t h = p.degree();
    for (auto v : p.images()) {
      h = h * 1000003u ^ v;
    }
    return h;
  }

}  // namespace qcs
