#pragma once

#include <vector>

#include "jw/structure/structure.hpp"

namespace jw::structure {

using trunc::TruncPoly;

/// Algebra map A_n(x) -> A_n(y) fixed by the images of the generators. The
/// images must have zero constant term, so each x_i^p still maps to 0.
class AlgebraHom {
 public:
  AlgebraHom(witt::WittPtr src, witt::WittPtr dst, std::vector<TruncPoly> generator_images);

  const witt::WittPtr& source() const noexcept { return src_; }
  const witt::WittPtr& target() const noexcept { return dst_; }
  const std::vector<TruncPoly>& generator_images() const noexcept { return images_; }
  /// Columns are images of source monomials, both sides in key order.
  const exactla::Matrix& matrix() const noexcept { return matrix_; }
  bool invertible() const noexcept { return inverse_.has_value(); }

  TruncPoly operator()(const TruncPoly& f) const;
  /// Throws NotRegular when the map is not invertible.
  TruncPoly inverse(const TruncPoly& g) const;

  /// E -> hom o E o hom^{-1}, read off on the target generators.
  WittElement induced(const WittElement& e) const;

 private:
  witt::WittPtr src_;
  witt::WittPtr dst_;
  std::vector<TruncPoly> images_;
  exactla::Matrix matrix_;
  std::optional<exactla::Matrix> inverse_;
};

/// psi_1: x_i -> x_i + x_1 (i >= 2); psi_k, k >= 2: additionally x_k -> x_k + x_1^2.
/// k >= 2 needs p > 2.
AlgebraHom psi_iso(const WittPtr& alg, std::size_t k);

/// x_i -> c_i y_1 + (1 - delta_{i1}) y_i into `target`; c_1 must be nonzero.
AlgebraHom phi_iso(const WittPtr& alg, const WittPtr& target, std::span<const gf::Elem> c);
/// Closed form of the induced phi on x^alpha D_i:
///   i = 1:  phi(x^alpha) (D~_1 - sum_{k>=2} c_k D~_k) / c_1
///   i >= 2: phi(x^alpha) D~_i
WittElement phi_closed_form(const AlgebraHom& phi, std::span<const gf::Elem> c,
                            const trunc::Monomial& alpha, std::size_t i);

/// Induced map preserves the bracket on every pair of basis elements.
bool preserves_brackets(const AlgebraHom& h);

}  // namespace jw::structure
