#include "grpwl/mekler.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "grpwl/error.hpp"

namespace grpwl {

MeklerGroup::MeklerGroup(Graph graph, std::uint32_t p) : graph_(std::move(graph)), p_(p) {
  if (p < 3 || !is_prime(p))
    throw Error(ErrorCode::kBadPrime, "Mekler construction needs an odd prime, got " + std::to_string(p));
  const std::size_t n = graph_.num_vertices();
  non_edge_pos_.assign(n * n, -1);
  for (Vertex j = 0; j < n; ++j)
    for (Vertex i = j + 1; i < n; ++i)
      if (!graph_.adjacent(j, i)) {
        non_edge_pos_[std::size_t{j} * n + i] = static_cast<std::ptrdiff_t>(non_edges_.size());
        non_edges_.emplace_back(j, i);
      }
}

std::uint64_t MeklerGroup::order() const {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < order_exponent(); ++i) {
    if (r > ~std::uint64_t{0} / p_) throw Error(ErrorCode::kCapExceeded, "group order overflows 64 bits");
    r *= p_;
  }
  return r;
}

MeklerElement MeklerGroup::identity() const {
  return {std::vector<std::uint32_t>(num_vertices(), 0),
          std::vector<std::uint32_t>(non_edges_.size(), 0)};
}

MeklerElement MeklerGroup::generator(Vertex v) const {
  auto x = identity();
  x.gen.at(v) = 1;
  return x;
}

MeklerElement MeklerGroup::commutator_basis(std::size_t k) const {
  auto x = identity();
  x.comm.at(k) = 1;
  return x;
}

std::ptrdiff_t MeklerGroup::non_edge_index(Vertex j, Vertex i) const {
  if (j > i) std::swap(j, i);
  return non_edge_pos_[std::size_t{j} * num_vertices() + i];
}

MeklerElement MeklerGroup::multiply(const MeklerElement& x, const MeklerElement& y) const {
  MeklerElement z;
  z.gen.resize(x.gen.size());
  z.comm.resize(x.comm.size());
  for (std::size_t i = 0; i < x.gen.size(); ++i) z.gen[i] = (x.gen[i] + y.gen[i]) % p_;
  // Moving x_j^{b_j} of y left past x_i^{a_i} of x (i > j) costs [x_i, x_j]^{a_i b_j}
  // = c_{(j,i)}^{-a_i b_j}.
  for (std::size_t k = 0; k < non_edges_.size(); ++k) {
    auto [j, i] = non_edges_[k];
    std::uint64_t d = std::uint64_t{x.gen[i]} * y.gen[j] % p_;
    z.comm[k] = static_cast<std::uint32_t>((x.comm[k] + y.comm[k] + p_ - d) % p_);
  }
  return z;
}

MeklerElement MeklerGroup::power(const MeklerElement& x, std::uint64_t e) const {
  MeklerElement r = identity(), b = x;
  while (e) {
    if (e & 1) r = multiply(r, b);
    b = multiply(b, b);
    e >>= 1;
  }
  return r;
}

MeklerElement MeklerGroup::inverse(const MeklerElement& x) const { return power(x, p_ - 1); }

MeklerElement MeklerGroup::commutator(const MeklerElement& a, const MeklerElement& b) const {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

bool MeklerGroup::commute(const MeklerElement& x, const MeklerElement& y) const {
  for (auto [j, i] : non_edges_) {
    std::uint64_t lhs = std::uint64_t{x.gen[i]} * y.gen[j] % p_;
    std::uint64_t rhs = std::uint64_t{y.gen[i]} * x.gen[j] % p_;
    if (lhs != rhs) return false;
  }
  return true;
}

std::uint64_t MeklerGroup::index(const MeklerElement& x) const {
  std::uint64_t r = 0;
  for (auto v : x.gen) r = r * p_ + v;
  for (auto v : x.comm) r = r * p_ + v;
  return r;
}

MeklerElement MeklerGroup::element(std::uint64_t index) const {
  MeklerElement x = identity();
  for (std::size_t k = x.comm.size(); k-- > 0;) {
    x.comm[k] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  for (std::size_t i = x.gen.size(); i-- > 0;) {
    x.gen[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return x;
}

Group MeklerGroup::to_cayley(std::size_t cap) const {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < order_exponent(); ++i) {
    total *= p_;
    if (total > cap)
      throw Error(ErrorCode::kCapExceeded, "Mekler group of order " + std::to_string(p_) + "^" +
                                               std::to_string(order_exponent()) +
                                               " exceeds cap " + std::to_string(cap));
  }
  const std::size_t n = num_vertices(), m = non_edges_.size();
  std::size_t gsize = 1, csize = 1;
  for (std::size_t i = 0; i < n; ++i) gsize *= p_;
  for (std::size_t i = 0; i < m; ++i) csize *= p_;

  auto digits = [&](std::size_t idx, std::size_t len) {
    std::vector<std::uint32_t> d(len);
    for (std::size_t i = len; i-- > 0;) {
      d[i] = static_cast<std::uint32_t>(idx % p_);
      idx /= p_;
    }
    return d;
  };
  auto undigits = [&](const std::vector<std::uint32_t>& d) {
    std::size_t r = 0;
    for (auto v : d) r = r * p_ + v;
    return r;
  };

  std::vector<std::vector<std::uint32_t>> gdig(gsize), cdig(csize);
  for (std::size_t a = 0; a < gsize; ++a) gdig[a] = digits(a, n);
  for (std::size_t c = 0; c < csize; ++c) cdig[c] = digits(c, m);

  // Generator-part sum and the commutator correction both depend only on the
  // two generator parts.
  std::vector<std::uint32_t> gsum(gsize * gsize), delta(gsize * gsize);
  for (std::size_t a = 0; a < gsize; ++a)
    for (std::size_t b = 0; b < gsize; ++b) {
      std::vector<std::uint32_t> s(n), d(m);
      for (std::size_t i = 0; i < n; ++i) s[i] = (gdig[a][i] + gdig[b][i]) % p_;
      for (std::size_t k = 0; k < m; ++k) {
        auto [j, i] = non_edges_[k];
        d[k] = static_cast<std::uint32_t>((p_ - std::uint64_t{gdig[a][i]} * gdig[b][j] % p_) % p_);
      }
      gsum[a * gsize + b] = static_cast<std::uint32_t>(undigits(s));
      delta[a * gsize + b] = static_cast<std::uint32_t>(undigits(d));
    }

  std::vector<std::uint32_t> cadd(csize * csize);
  for (std::size_t x = 0; x < csize; ++x)
    for (std::size_t y = 0; y < csize; ++y) {
      std::vector<std::uint32_t> s(m);
      for (std::size_t k = 0; k < m; ++k) s[k] = (cdig[x][k] + cdig[y][k]) % p_;
      cadd[x * csize + y] = static_cast<std::uint32_t>(undigits(s));
    }

  const std::size_t N = total;
  std::vector<Element> table(N * N);
  for (std::size_t a = 0; a < gsize; ++a)
    for (std::size_t alpha = 0; alpha < csize; ++alpha) {
      Element* row = &table[(a * csize + alpha) * N];
      for (std::size_t b = 0; b < gsize; ++b) {
        std::size_t base = std::size_t{gsum[a * gsize + b]} * csize;
        std::size_t shift = cadd[alpha * csize + delta[a * gsize + b]];
        const std::uint32_t* crow = &cadd[shift * csize];
        Element* out = row + b * csize;
        for (std::size_t beta = 0; beta < csize; ++beta)
          out[beta] = static_cast<Element>(base + crow[beta]);
      }
    }
  return validate_cayley(N, std::move(table));
}

std::vector<Vertex> support(const MeklerGroup&, const MeklerElement& x) {
  std::vector<Vertex> s;
  for (std::size_t i = 0; i < x.gen.size(); ++i)
    if (x.gen[i] != 0) s.push_back(static_cast<Vertex>(i));
  return s;
}

MeklerElement sub_word(const MeklerGroup& m, const MeklerElement& x, const std::vector<Vertex>& s) {
  MeklerElement y = m.identity();
  for (Vertex v : s) y.gen.at(v) = x.gen.at(v);
  return y;
}

MeklerSubgroup centralizer_formula(const MeklerGroup& m, const MeklerElement& x) {
  MeklerSubgroup out;
  const auto supp = support(m, x);
  const Graph& g = m.graph();
  if (supp.empty()) {
    for (Vertex v = 0; v < m.num_vertices(); ++v) out.generators.push_back(m.generator(v));
  } else {
    Graph co = complement(induced_subgraph(g, supp));
    for (const auto& comp : components(co)) {
      std::vector<Vertex> part;
      for (Vertex local : comp) part.push_back(supp[local]);
      out.generators.push_back(sub_word(m, x, part));
    }
    for (Vertex v = 0; v < m.num_vertices(); ++v) {
      if (std::binary_search(supp.begin(), supp.end(), v)) continue;
      bool all = std::all_of(supp.begin(), supp.end(), [&](Vertex s) { return g.adjacent(s, v); });
      if (all) out.generators.push_back(m.generator(v));
    }
  }
  for (std::size_t k = 0; k < m.non_edges().size(); ++k)
    out.generators.push_back(m.commutator_basis(k));
  return out;
}

MeklerSubgroup center_of(const MeklerGroup& m) {
  MeklerSubgroup out;
  const Graph& g = m.graph();
  for (Vertex v = 0; v < m.num_vertices(); ++v)
    if (g.degree(v) + 1 == m.num_vertices()) out.generators.push_back(m.generator(v));
  for (std::size_t k = 0; k < m.non_edges().size(); ++k)
    out.generators.push_back(m.commutator_basis(k));
  return out;
}

std::vector<std::uint64_t> closure(const MeklerGroup& m, const std::vector<MeklerElement>& gens,
                                   std::size_t cap) {
  std::vector<MeklerElement> queue{m.identity()};
  std::unordered_set<std::uint64_t> seen{m.index(queue[0])};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& s : gens) {
      MeklerElement y = m.multiply(queue[i], s);
      if (seen.insert(m.index(y)).second) {
        if (seen.size() > cap)
          throw Error(ErrorCode::kCapExceeded, "Mekler closure exceeds cap " + std::to_string(cap));
        queue.push_back(std::move(y));
      }
    }
  std::vector<std::uint64_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

void verify_axioms_implicit(const MeklerGroup& m) {
  const std::size_t n = m.num_vertices();
  const std::uint32_t p = m.prime();
  std::uint64_t gsize = 1;
  for (std::size_t i = 0; i < n; ++i) gsize *= p;
  if (gsize > (std::uint64_t{1} << 10))
    throw Error(ErrorCode::kCapExceeded, "implicit check limited to p^n <= 1024");
  auto gen_part = [&](std::uint64_t idx) {
    MeklerElement x = m.identity();
    for (std::size_t i = n; i-- > 0;) {
      x.gen[i] = static_cast<std::uint32_t>(idx % p);
      idx /= p;
    }
    return x;
  };
  std::vector<MeklerElement> parts(gsize);
  for (std::uint64_t a = 0; a < gsize; ++a) parts[a] = gen_part(a);
  const MeklerElement e = m.identity();
  for (const auto& a : parts)
    if (m.multiply(a, e) != a || m.multiply(e, a) != a)
      throw Error(ErrorCode::kNoIdentity, "normal form 0 is not a two-sided identity");
  for (const auto& a : parts)
    for (const auto& b : parts) {
      MeklerElement ab = m.multiply(a, b);
      for (const auto& c : parts)
        if (m.multiply(ab, c) != m.multiply(a, m.multiply(b, c)))
          throw NotAssociativeError(static_cast<std::uint32_t>(m.index(a)),
                                    static_cast<std::uint32_t>(m.index(b)),
                                    static_cast<std::uint32_t>(m.index(c)));
    }
}

}  // namespace grpwl
