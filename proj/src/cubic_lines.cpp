#include "picard/cubic_lines.hpp"

#include <algorithm>
#include <stdexcept>

namespace picard {

LineLabel LineLabel::from_index(int idx) {
  if (idx < 0 || idx >= 27) throw std::invalid_argument("LineLabel: index out of range");
  return {idx / 9 + 1, (idx % 9) / 3, idx % 3};
}

std::string LineLabel::str() const {
  return "f" + std::to_string(family) + "_" + std::to_string(i) + std::to_string(j);
}

std::string to_string(Subst s) {
  switch (s) {
    case Subst::sigma1: return "sigma1";
    case Subst::sigma2: return "sigma2";
    case Subst::sigma3: return "sigma3";
    case Subst::gamma_lambda: return "gamma_lambda";
    case Subst::gamma_mu: return "gamma_mu";
  }
  throw std::logic_error("unknown Subst");
}

FormVec apply_subst(Subst s, const FormVec& form) {
  FormVec out = form;
  switch (s) {
    case Subst::sigma1:
    case Subst::sigma2:
    case Subst::sigma3: {
      // the image of {F = 0} under a coordinate scaling is {F o inverse = 0}
      auto col = static_cast<std::size_t>(s == Subst::sigma1 ? 0 : (s == Subst::sigma2 ? 1 : 2));
      out[col] = out[col] * CycloInt::omega_pow(-1);
      break;
    }
    case Subst::gamma_lambda:
      for (auto& c : out) c = c.twist_a(1);
      break;
    case Subst::gamma_mu:
      for (auto& c : out) c = c.twist_b(1);
      break;
  }
  return out;
}

namespace {

bool row_zero(const FormVec& r) {
  return std::all_of(r.begin(), r.end(), [](const PolyZw& p) { return p.is_zero(); });
}

FormVec normalize_row(FormVec r) {
  Mono gcd{0, 0};
  bool first = true;
  for (const auto& e : r) {
    if (e.is_zero()) continue;
    Mono m = e.monomial_gcd();
    if (first) {
      gcd = m;
      first = false;
    } else {
      gcd.da = std::min(gcd.da, m.da);
      gcd.db = std::min(gcd.db, m.db);
    }
  }
  if (first) throw std::invalid_argument("canonical_pair: zero row");
  for (auto& e : r)
    if (!e.is_zero()) e = e.divided_by(gcd);
  for (const auto& e : r) {
    if (e.is_zero()) continue;
    CycloInt lead = e.leading().second;
    if (!lead.is_unit())
      throw std::logic_error("canonical_pair: non-unit leading coefficient " + lead.str());
    if (lead != CycloInt::one()) {
      CycloInt u = lead.unit_inverse();
      for (auto& x : r) x = x * u;
    }
    break;
  }
  return r;
}

std::string pair_key(const std::pair<FormVec, FormVec>& p) {
  std::string key;
  for (const auto* row : {&p.first, &p.second}) {
    for (const auto& e : *row) key += e.str() + "|";
    key += "|";
  }
  return key;
}

PolyZw det2(const PolyZw& a, const PolyZw& b, const PolyZw& c, const PolyZw& d) {
  return a * d - b * c;
}

PolyZw det3(const std::array<std::array<const PolyZw*, 3>, 3>& m) {
  PolyZw out;
  out = out + *m[0][0] * det2(*m[1][1], *m[1][2], *m[2][1], *m[2][2]);
  out = out - *m[0][1] * det2(*m[1][0], *m[1][2], *m[2][0], *m[2][2]);
  out = out + *m[0][2] * det2(*m[1][0], *m[1][1], *m[2][0], *m[2][1]);
  return out;
}

PolyZw det4(const std::array<const FormVec*, 4>& rows) {
  PolyZw out;
  for (int c = 0; c < 4; ++c) {
    std::array<std::array<const PolyZw*, 3>, 3> minor{};
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int k = 0; k < 4; ++k) {
        if (k == c) continue;
        minor[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(cc++)] =
            &(*rows[static_cast<std::size_t>(r)])[static_cast<std::size_t>(k)];
      }
    }
    PolyZw term = (*rows[0])[static_cast<std::size_t>(c)] * det3(minor);
    out = (c % 2 == 0) ? out + term : out - term;
  }
  return out;
}

}  // namespace

std::pair<FormVec, FormVec> canonical_pair(FormVec f, FormVec g) {
  if (row_zero(f) || row_zero(g))
    throw std::invalid_argument("canonical_pair: zero form");
  std::size_t c1 = 0;
  while (c1 < 4 && f[c1].is_zero() && g[c1].is_zero()) ++c1;
  if (f[c1].is_zero()) std::swap(f, g);
  if (!g[c1].is_zero()) {
    FormVec h;
    for (std::size_t k = 0; k < 4; ++k) h[k] = f[c1] * g[k] - g[c1] * f[k];
    g = h;
  }
  std::size_t c2 = 0;
  while (c2 < 4 && g[c2].is_zero()) ++c2;
  if (c2 == 4) throw std::invalid_argument("canonical_pair: forms are dependent");
  if (!f[c2].is_zero()) {
    FormVec h;
    for (std::size_t k = 0; k < 4; ++k) h[k] = g[c2] * f[k] - f[c2] * g[k];
    f = h;
  }
  return {normalize_row(std::move(f)), normalize_row(std::move(g))};
}

bool same_span(const FormVec& f, const FormVec& g, const FormVec& f2, const FormVec& g2) {
  auto in_span = [&](const FormVec& v) {
    // rank of [f; g; v] stays 2: all four 3x3 minors vanish
    for (int c = 0; c < 4; ++c) {
      std::array<std::array<const PolyZw*, 3>, 3> m{};
      int cc = 0;
      for (int k = 0; k < 4; ++k) {
        if (k == c) continue;
        m[0][static_cast<std::size_t>(cc)] = &f[static_cast<std::size_t>(k)];
        m[1][static_cast<std::size_t>(cc)] = &g[static_cast<std::size_t>(k)];
        m[2][static_cast<std::size_t>(cc)] = &v[static_cast<std::size_t>(k)];
        ++cc;
      }
      if (!det3(m).is_zero()) return false;
    }
    return true;
  };
  return in_span(f2) && in_span(g2);
}

CubicLines::CubicLines() {
  for (int idx = 0; idx < 27; ++idx) {
    LineLabel lab = LineLabel::from_index(idx);
    PolyZw a1 = PolyZw::a_pow(1), a2 = PolyZw::a_pow(2);
    PolyZw b1 = PolyZw::b_pow(1), b2 = PolyZw::b_pow(2);
    PolyZw wi = PolyZw::omega_pow(lab.i), wj = PolyZw::omega_pow(lab.j);
    LineEq eq;
    eq.label = lab;
    switch (lab.family) {
      case 1:
        eq.f = {a1, wi * a2, PolyZw(), PolyZw()};
        eq.g = {PolyZw(), PolyZw(), b1, wj * b2};
        break;
      case 2:
        eq.f = {a1, PolyZw(), wi * b1, PolyZw()};
        eq.g = {PolyZw(), a2, PolyZw(), wj * b2};
        break;
      default:
        eq.f = {a1, PolyZw(), PolyZw(), wi * b2};
        eq.g = {PolyZw(), a2, wj * b1, PolyZw()};
        break;
    }
    lines_.push_back(std::move(eq));
  }
  for (const auto& eq : lines_) {
    auto key = pair_key(canonical_pair(eq.f, eq.g));
    if (!canon_index_.emplace(key, eq.label.index()).second)
      throw std::logic_error("CubicLines: duplicate canonical form");
  }
  for (int p = 0; p < 27; ++p)
    for (int q = 0; q < 27; ++q)
      meets_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
          (p != q) && incidence_determinant(p, q).is_zero();
}

PolyZw CubicLines::incidence_determinant(int p, int q) const {
  const auto& lp = lines_[static_cast<std::size_t>(p)];
  const auto& lq = lines_[static_cast<std::size_t>(q)];
  return det4({&lp.f, &lp.g, &lq.f, &lq.g});
}

bool CubicLines::line_on_surface(int idx) const {
  const auto& eq = lines_[static_cast<std::size_t>(idx)];
  const FormVec& F = eq.f;
  const FormVec& G = eq.g;
  // pivot pair with nonzero 2x2 minor
  int p = -1, q = -1;
  PolyZw D;
  for (int i = 0; i < 4 && p < 0; ++i)
    for (int j = i + 1; j < 4; ++j) {
      D = det2(F[static_cast<std::size_t>(i)], F[static_cast<std::size_t>(j)],
               G[static_cast<std::size_t>(i)], G[static_cast<std::size_t>(j)]);
      if (!D.is_zero()) {
        p = i;
        q = j;
        break;
      }
    }
  if (p < 0) throw std::logic_error("line_on_surface: forms are dependent");
  // kernel basis via Cramer: one vector per free column
  std::array<FormVec, 2> w;
  int wn = 0;
  for (int c = 0; c < 4; ++c) {
    if (c == p || c == q) continue;
    FormVec v{};
    v[static_cast<std::size_t>(p)] = F[static_cast<std::size_t>(q)] * G[static_cast<std::size_t>(c)] -
                                     F[static_cast<std::size_t>(c)] * G[static_cast<std::size_t>(q)];
    v[static_cast<std::size_t>(q)] = F[static_cast<std::size_t>(c)] * G[static_cast<std::size_t>(p)] -
                                     F[static_cast<std::size_t>(p)] * G[static_cast<std::size_t>(c)];
    v[static_cast<std::size_t>(c)] = D;
    w[static_cast<std::size_t>(wn++)] = v;
  }
  // both kernel vectors must annihilate both forms
  for (const auto& v : w)
    for (const auto* form : {&F, &G}) {
      PolyZw s;
      for (std::size_t k = 0; k < 4; ++k) s = s + (*form)[k] * v[k];
      if (!s.is_zero()) throw std::logic_error("line_on_surface: kernel computation failed");
    }
  // lambda x^3 + lambda^2 y^3 + mu z^3 + mu^2 t^3 with lambda = a^3, mu = b^3,
  // restricted to u w0 + v w1; check each u^(3-k) v^k coefficient
  const std::array<PolyZw, 4> weight = {PolyZw::a_pow(3), PolyZw::a_pow(6),
                                        PolyZw::b_pow(3), PolyZw::b_pow(6)};
  const long long binom[4] = {1, 3, 3, 1};
  for (int k = 0; k <= 3; ++k) {
    PolyZw coeff;
    for (std::size_t m = 0; m < 4; ++m) {
      PolyZw t = PolyZw(CycloInt{binom[k], 0});
      for (int e = 0; e < 3 - k; ++e) t = t * w[0][m];
      for (int e = 0; e < k; ++e) t = t * w[1][m];
      coeff = coeff + weight[m] * t;
    }
    if (!coeff.is_zero()) return false;
  }
  return true;
}

int CubicLines::match_line(const FormVec& f, const FormVec& g) const {
  auto key = pair_key(canonical_pair(f, g));
  auto it = canon_index_.find(key);
  if (it == canon_index_.end())
    throw std::invalid_argument("match_line: no line with form span {" + f[0].str() + ", ...}");
  return it->second;
}

Permutation CubicLines::substitution_perm(Subst s) const {
  std::vector<int> img(27);
  for (const auto& eq : lines_) {
    int to;
    try {
      to = match_line(apply_subst(s, eq.f), apply_subst(s, eq.g));
    } catch (const std::invalid_argument&) {
      throw std::logic_error("substitution_perm: image of " + eq.label.str() +
                             " under " + to_string(s) + " is not one of the 27 lines");
    }
    img[static_cast<std::size_t>(eq.label.index())] = to;
  }
  return Permutation::from_images(img);
}

LineMatching::LineMatching(const CubicLines& cl, const WeylE6& weyl) {
  // lexicographically first 6-clique of the disjointness graph
  std::vector<int> clique;
  auto extend = [&](auto&& self, int from) -> bool {
    if (clique.size() == 6) return true;
    for (int v = from; v < 27; ++v) {
      bool ok = true;
      for (int u : clique)
        if (u == v || cl.meets(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      clique.push_back(v);
      if (self(self, v + 1)) return true;
      clique.pop_back();
    }
    return false;
  };
  if (!extend(extend, 0))
    throw std::logic_error("LineMatching: no 6-clique in the disjointness graph");
  std::copy(clique.begin(), clique.end(), sixer_.begin());

  std::fill(a_of_l_.begin(), a_of_l_.end(), -1);
  std::fill(l_of_a_.begin(), l_of_a_.end(), -1);
  auto assign = [&](int label, const LatticeVector& v) {
    int a = weyl.line_index(v);
    if (a_of_l_[static_cast<std::size_t>(label)] != -1 || l_of_a_[static_cast<std::size_t>(a)] != -1)
      throw std::logic_error("LineMatching: extension is not a bijection");
    a_of_l_[static_cast<std::size_t>(label)] = a;
    l_of_a_[static_cast<std::size_t>(a)] = label;
  };
  for (int k = 0; k < 6; ++k)
    assign(clique[static_cast<std::size_t>(k)], LatticeVector::unit(7, k + 1));
  for (int v = 0; v < 27; ++v) {
    if (std::find(clique.begin(), clique.end(), v) != clique.end()) continue;
    std::vector<int> nbrs;
    for (int k = 0; k < 6; ++k)
      if (cl.meets(v, clique[static_cast<std::size_t>(k)])) nbrs.push_back(k);
    if (nbrs.size() == 2) {
      // meets E_{k1}, E_{k2} only: the class L - E_{k1} - E_{k2}
      std::vector<Coord> c(7, 0);
      c[0] = 1;
      c[static_cast<std::size_t>(nbrs[0] + 1)] = -1;
      c[static_cast<std::size_t>(nbrs[1] + 1)] = -1;
      assign(v, LatticeVector(std::move(c)));
    } else if (nbrs.size() == 5) {
      // meets all but E_k: the class 2L - sum E + E_k
      int missing = 0;
      for (int k = 0; k < 6; ++k)
        if (std::find(nbrs.begin(), nbrs.end(), k) == nbrs.end()) missing = k;
      std::vector<Coord> c(7, -1);
      c[0] = 2;
      c[static_cast<std::size_t>(missing + 1)] = 0;
      assign(v, LatticeVector(std::move(c)));
    } else {
      throw std::logic_error("LineMatching: line " + LineLabel::from_index(v).str() +
                             " meets " + std::to_string(nbrs.size()) +
                             " members of the sixer");
    }
  }
  // full isomorphism check on all pairs, both directions
  const auto& abstract_lines = weyl.lines();
  for (int p = 0; p < 27; ++p)
    for (int q = p + 1; q < 27; ++q) {
      bool sym = cl.meets(p, q);
      Coord ab = pairing(abstract_lines[static_cast<std::size_t>(a_of_l_[static_cast<std::size_t>(p)])].v,
                         abstract_lines[static_cast<std::size_t>(a_of_l_[static_cast<std::size_t>(q)])].v);
      if (sym != (ab == 1))
        throw std::logic_error("LineMatching: matching is not a graph isomorphism");
    }
}

Permutation LineMatching::to_abstract(const Permutation& label_perm) const {
  if (label_perm.degree() != 27)
    throw std::invalid_argument("to_abstract: degree mismatch");
  std::vector<int> img(27);
  for (int l = 0; l < 27; ++l)
    img[static_cast<std::size_t>(a_of_l_[static_cast<std::size_t>(l)])] =
        a_of_l_[static_cast<std::size_t>(label_perm(l))];
  return Permutation::from_images(img);
}

WeylElement embed_in_weyl(const LineMatching& matching, const WeylE6& weyl,
                          const Permutation& label_perm) {
  return weyl.element(matching.to_abstract(label_perm));
}

}  // namespace picard
