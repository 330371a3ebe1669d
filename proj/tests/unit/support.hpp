#pragma once

#include <catch_amalgamated.hpp>

#include "torusquant/representations.hpp"

namespace tq::test {

inline Lagrangian lag(int g, const std::vector<IntVector>& rows) {
  return Lagrangian::from_rows(SymplecticSpace::standard(g), IntMatrix::from_rows(rows, 2 * g));
}

inline HilbertSpace canonical(const Lagrangian& l, std::int64_t k) { return HilbertSpace::make(Polarization::canonical(l), k); }

inline HilbertSpace framed(const Lagrangian& l, const AdaptedBasis& f, std::int64_t k) {
  return HilbertSpace::make(Polarization::with_frame(l, f), k);
}

inline double dist(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }
inline ComplexMatrix eye(std::int64_t n) { return ComplexMatrix::Identity(n, n); }

// e^{i pi t} with plain floating arithmetic, independent of UnitPhase
inline Complex cis_pi(double t) { return std::polar(1.0, 3.14159265358979323846 * t); }

}  // namespace tq::test
