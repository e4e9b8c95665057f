#include "mouldkit/app/sampling.hpp"

#include "mouldkit/lie.hpp"

namespace mouldkit::app {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

NCPoly adx_generator(int i) {
  NCPoly p = NCPoly::y();
  for (int k = 1; k < i; ++k) p = lie_bracket(NCPoly::x(), p);
  return p;
}

}  // namespace

Rational random_rational(Rng& rng) {
  int n = 0;
  while (n == 0) n = uniform(rng, -5, 5);
  Rational q(n, uniform(rng, 1, 3));
  q.canonicalize();
  return q;
}

NCPoly random_lie(int w, Rng& rng) {
  NCPoly out;
  for (const auto& b : lyndon_basis(w, Alphabet::xy()))
    if (uniform(rng, 0, 2) > 0) out += random_rational(rng) * b;
  return out;
}

NCPoly random_homogeneous(int w, Rng& rng, int terms) {
  NCPoly out;
  for (int t = 0; t < terms; ++t) {
    Word word;
    for (int k = 0; k < w; ++k) word.push_back(static_cast<std::uint8_t>(uniform(rng, 0, 1)));
    out.add_term(word, random_rational(rng));
  }
  return out;
}

NCPoly random_adx_product(int w, Rng& rng) {
  NCPoly out;
  for (int t = 0; t < 2; ++t) {
    NCPoly prod = NCPoly::one(Alphabet::xy());
    int left = w;
    while (left > 0) {
      int i = uniform(rng, 1, left);
      prod = prod * adx_generator(i);
      left -= i;
    }
    out += random_rational(rng) * prod;
  }
  return out;
}

Vector random_combination(const std::vector<Vector>& basis, std::size_t dim, Rng& rng) {
  Vector v(dim);
  for (const auto& b : basis) {
    Rational c = random_rational(rng);
    for (std::size_t i = 0; i < dim; ++i) v[i] += c * b[i];
  }
  return v;
}

Mould random_mould(std::size_t depth, int degree, Rng& rng) {
  Mould m(depth);
  for (std::size_t r = 1; r <= depth; ++r) {
    MultiPoly p(r);
    const int terms = uniform(rng, 1, 4);
    for (int t = 0; t < terms; ++t) {
      Exponents e(r, 0);
      int deg = uniform(rng, 0, degree);
      for (int k = 0; k < deg; ++k) ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(r) - 1))];
      p.add_term(e, random_rational(rng));
    }
    m.set(r, std::move(p));
  }
  return m;
}

}  // namespace mouldkit::app
