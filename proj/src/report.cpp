#include "qcs/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace qcs {

  std::string_view to_string(Law law) noexcept {
    switch (law) {
      case Law::row_bijectivity: return "row-bijectivity";
      case Law::axiom_1: return "axiom-1";
      case Law::axiom_2: return "axiom-2";
      case Law::axiom_3: return "axiom-3";
      case Law::braid: return "braid";
      case Law::alpha_bijectivity: return "alpha-bijectivity";
      case Law::ugd1: return "ugd1";
      case Law::ugd2: return "ugd2";
      case Law::ugd3: return "ugd3";
      case Law::homomorphism_dot: return "homomorphism-dot";
      case Law::homomorphism_colon: return "homomorphism-colon";
      case Law::surjectivity: return "surjectivity";
      case Law::fiber_uniformity: return "fiber-uniformity";
    }
    return "unknown";
  }

  bool VerificationReport::has(Law law) const noexcept {
    return std::any_of(_violations.begin(),
                       _violations.end(),
                       [law](Violation const& v) { return v.law == law; });
  }

  void VerificationReport::merge(VerificationReport const& other) {
    _violations.insert(
        _violations.end(), other._violations.begin(), other._violations.end());
  }

  std::string VerificationReport::summary() const {
    if (ok()) {
      return "ok";
    }
    std::ostringstream oss;
    oss << _violations.front();
    if (_violations.size() > 1) {
      oss << " (+" << _violations.size() - 1 << " more)";
    }
    return oss.str();
  }

  namespace {
    void print_tuple(std::ostream& os, std::vector<point_type> const& t) {
      os << '(';
      for (std::size_t i = 0; i < t.size(); ++i) {
        os << (i ? "," : "") << t[i];
      }
      os << ')';
    }
  }  // namespace

  std::ostream& operator<<(std::ostream& os, Violation const& v) {
    os << to_string(v.law) << " at ";
    print_tuple(os, v.witness);
    if (!v.lhs.empty() || !v.rhs.empty()) {
      os << ": lhs=";
      print_tuple(os, v.lhs);
      os << " rhs=";
      print_tuple(os, v.rhs);
    }
    return os;
  }

}  // namespace qcs
