#include "jw/structure/random.hpp"

namespace jw::structure {

gf::Elem random_elem(const gf::Field& f, Rng& rng) { return f.from_code(rng() % f.order()); }

witt::WittElement random_element(const witt::WittPtr& alg, Rng& rng) {
  std::vector<gf::Elem> coords(alg->dim());
  for (auto& c : coords) c = random_elem(*alg->field(), rng);
  return witt::WittElement::from_coords(alg, coords);
}

gf::RegularVector random_regular(const gf::FieldPtr& field, std::size_t n, Rng& rng) {
  if (field->degree() < n) throw Error(ErrorKind::FieldTooSmall, "regular vectors need deg >= n");
  std::vector<gf::Elem> v(n);
  for (;;) {
    for (auto& e : v) e = random_elem(*field, rng);
    if (gf::is_regular(*field, v)) return gf::RegularVector(field, v);
  }
}

}  // namespace jw::structure
