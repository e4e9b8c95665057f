#include "mouldkit/mould.hpp"

#include "mouldkit/errors.hpp"

namespace mouldkit {

namespace {

LinearForm var(std::size_t arity, std::size_t i) { return LinearForm::variable(arity, i); }

// Applies a per-component substitution. `sigma(m)` gives the m forms.
template <class Sigma>
Mould remap(const Mould& in, Sigma sigma) {
  Mould out(in.depth());
  out.set(0, in[0]);
  for (std::size_t m = 1; m <= in.depth(); ++m) {
    if (in[m].is_zero()) continue;
    out.set(m, substitute(in[m], sigma(m), m));
  }
  return out;
}

}  // namespace

Mould::Mould(std::size_t depth) {
  comps_.reserve(depth + 1);
  for (std::size_t m = 0; m <= depth; ++m) comps_.emplace_back(m);
}

Mould Mould::unit(std::size_t depth) {
  Mould u(depth);
  u.set(0, MultiPoly::constant(0, 1));
  return u;
}

MultiPoly Mould::component(std::size_t m) const { return m < comps_.size() ? comps_[m] : MultiPoly(m); }

void Mould::set(std::size_t m, MultiPoly p) {
  if (p.arity() != m) throw MalformedSubstitution("mould component " + std::to_string(m) + " must have arity " + std::to_string(m));
  while (comps_.size() <= m) comps_.emplace_back(comps_.size());
  comps_[m] = std::move(p);
}

bool Mould::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

bool Mould::in_filtration(std::size_t d) const {
  for (std::size_t r = 0; r < d && r < comps_.size(); ++r)
    if (!comps_[r].is_zero()) return false;
  return true;
}

Mould Mould::truncated(std::size_t depth) const {
  Mould t(depth);
  for (std::size_t m = 0; m <= depth && m < comps_.size(); ++m) t.comps_[m] = comps_[m];
  return t;
}

Mould& Mould::operator+=(const Mould& o) {
  for (std::size_t m = 0; m <= o.depth(); ++m) {
    if (m > depth()) set(m, MultiPoly(m));
    comps_[m] += o.comps_[m];
  }
  return *this;
}

Mould& Mould::operator-=(const Mould& o) {
  for (std::size_t m = 0; m <= o.depth(); ++m) {
    if (m > depth()) set(m, MultiPoly(m));
    comps_[m] -= o.comps_[m];
  }
  return *this;
}

Mould& Mould::operator*=(const Rational& c) {
  for (auto& p : comps_) p *= c;
  return *this;
}

bool operator==(const Mould& a, const Mould& b) {
  std::size_t n = std::max(a.depth(), b.depth());
  for (std::size_t m = 0; m <= n; ++m)
    if (!(a.component(m) == b.component(m))) return false;
  return true;
}

Mould ConstantMould::to_mould() const {
  Mould c(values.empty() ? 0 : values.size() - 1);
  for (std::size_t m = 0; m < values.size(); ++m) c.set(m, MultiPoly::constant(m, values[m]));
  return c;
}

// ------------------------------------------------------------------ algebra

namespace {

// p(x_{offset+1}, ..., x_{offset+k}) inside `arity` variables.
MultiPoly shifted(const MultiPoly& p, std::size_t offset, std::size_t arity) {
  MultiPoly r(arity);
  Exponents e(arity, 0);
  for (const auto& [pe, c] : p.terms()) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t i = 0; i < pe.size(); ++i) e[offset + i] = pe[i];
    r.add_term(e, c);
  }
  return r;
}

}  // namespace

Mould mould_mul(const Mould& a, const Mould& b) {
  const std::size_t depth = a.depth() + b.depth();
  Mould r(depth);
  for (std::size_t m = 0; m <= depth; ++m) {
    MultiPoly acc(m);
    for (std::size_t i = 0; i <= m; ++i) {
      if (i > a.depth() || m - i > b.depth()) continue;
      if (a[i].is_zero() || b[m - i].is_zero()) continue;
      acc += shifted(a[i], 0, m) * shifted(b[m - i], i, m);
    }
    r.set(m, std::move(acc));
  }
  return r;
}

Mould swap(const Mould& in) {
  return remap(in, [](std::size_t m) {
    std::vector<LinearForm> s;
    s.push_back(var(m, m - 1));
    for (std::size_t k = 1; k < m; ++k) s.push_back(var(m, m - 1 - k) - var(m, m - k));
    return s;
  });
}

Mould unswap(const Mould& in) {
  return remap(in, [](std::size_t m) {
    std::vector<LinearForm> s;
    for (std::size_t k = 0; k < m; ++k) s.push_back(LinearForm::range_sum(m, 0, m - 1 - k));
    return s;
  });
}

Mould pus(const Mould& in) {
  return remap(in, [](std::size_t m) {
    std::vector<LinearForm> s;
    s.push_back(var(m, m - 1));
    for (std::size_t k = 1; k < m; ++k) s.push_back(var(m, k - 1));
    return s;
  });
}

Mould push(const Mould& in) {
  return remap(in, [](std::size_t m) {
    std::vector<LinearForm> s;
    s.push_back(-LinearForm::range_sum(m, 0, m - 1));
    for (std::size_t k = 1; k < m; ++k) s.push_back(var(m, k - 1));
    return s;
  });
}

Mould mantar(const Mould& in) {
  Mould out = remap(in, [](std::size_t m) {
    std::vector<LinearForm> s;
    for (std::size_t k = 0; k < m; ++k) s.push_back(var(m, m - 1 - k));
    return s;
  });
  for (std::size_t m = 2; m <= out.depth(); m += 2) {
    MultiPoly c = out[m];
    c *= Rational(-1);
    out.set(m, std::move(c));
  }
  return out;
}

Mould neg(const Mould& in) {
  return remap(in, [](std::size_t m) {
    std::vector<LinearForm> s;
    for (std::size_t k = 0; k < m; ++k) s.push_back(-var(m, k));
    return s;
  });
}

Mould teru(const Mould& in) {
  Mould out = in;
  for (std::size_t m = 2; m <= in.depth() + 1; ++m) {
    const MultiPoly& lower = in[m - 1];
    if (lower.is_zero()) continue;
    std::vector<LinearForm> merged, plain;
    for (std::size_t k = 0; k + 1 < m; ++k) {
      plain.push_back(var(m, k));
      merged.push_back(k + 2 == m ? var(m, k) + var(m, k + 1) : var(m, k));
    }
    MultiPoly diff = substitute(lower, merged, m) - substitute(lower, plain, m);
    MultiPoly corr = exact_div(diff, MultiPoly::variable(m, m - 1));
    out.set(m, out.component(m) + corr);
  }
  return out;
}

Mould translate_t(const Mould& in) {
  Mould out(in.depth() + 1);
  out.set(0, in[0]);
  if (in.depth() >= 1) out.set(1, in[1]);
  for (std::size_t m = 2; m <= in.depth() + 1; ++m) {
    const MultiPoly& src = in[m - 1];
    if (src.is_zero()) continue;
    std::vector<LinearForm> s;
    for (std::size_t k = 0; k + 1 < m; ++k) s.push_back(var(m, k + 1) - var(m, 0));
    out.set(m, substitute(src, s, m));
  }
  return out;
}

Mould u_map(const Mould& in) { return translate_t(swap(in)); }

Mould coll(const Mould& in, std::size_t depth, std::size_t slot) {
  if (depth < 2 || slot < 1 || slot + 1 > depth)
    throw SlotError("collision coll^" + std::to_string(depth) + "_{" + std::to_string(slot) + "," +
                    std::to_string(slot + 1) + "} is undefined");
  Mould out = in;
  const MultiPoly lower = in.component(depth - 1);
  const std::size_t m = depth;
  // 0-based: keep x_i (index slot-1) and drop x_{i+1}, or the reverse.
  std::vector<LinearForm> keep_first, keep_second;
  for (std::size_t k = 0; k < m; ++k) {
    if (k != slot) keep_first.push_back(var(m, k));
    if (k != slot - 1) keep_second.push_back(var(m, k));
  }
  MultiPoly diff = substitute(lower, keep_first, m) - substitute(lower, keep_second, m);
  LinearForm den = var(m, slot - 1) - var(m, slot);
  out.set(m, exact_div(diff, MultiPoly::from_linear(den)));
  return out;
}

MultiPoly permuted(const MultiPoly& p, const std::vector<std::size_t>& perm) {
  MultiPoly r(p.arity());
  Exponents e(p.arity());
  for (const auto& [pe, c] : p.terms()) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t k = 0; k < pe.size(); ++k) e[perm[k]] += pe[k];
    r.add_term(e, c);
  }
  return r;
}

MultiPoly pus_sum(const Mould& in, std::size_t m) {
  MultiPoly acc(m);
  const MultiPoly comp = in.component(m);
  std::vector<std::size_t> perm(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) perm[k] = (k + i) % m;
    acc += permuted(comp, perm);
  }
  return acc;
}

bool is_pus_neutral(const Mould& in) {
  for (std::size_t m = 1; m <= in.depth(); ++m)
    if (!pus_sum(in, m).is_zero()) return false;
  return true;
}

}  // namespace mouldkit
