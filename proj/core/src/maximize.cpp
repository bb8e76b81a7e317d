#include <algorithm>
#include <bit>
#include <cstring>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "svet/detail/bitops.hpp"
#include "svet/strategy.hpp"

namespace svet {

namespace {

using detail::popcount64;

int masked_distance(const std::uint64_t* c, const std::uint64_t* target,
                    const std::uint64_t* sup, std::size_t nwords) {
  int d = 0;
  for (std::size_t w = 0; w < nwords; ++w) d += popcount64((c[w] ^ target[w]) & sup[w]);
  return d;
}

bool word_less(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
  for (std::size_t w = nwords; w-- > 0;) {
    if (a[w] != b[w]) return a[w] < b[w];
  }
  return false;
}

// ANF (Moebius) transform in place: f[T] becomes the GF(2) coefficient of the
// monomial T in the function whose truth table was f.
void anf_transform(std::vector<std::uint8_t>& f, int m) {
  for (int b = 0; b < m; ++b) {
    const std::uint32_t bit = std::uint32_t(1) << b;
    for (std::uint32_t x = 0; x < f.size(); ++x)
      if (x & bit) f[x] ^= f[x ^ bit];
  }
}

DeterministicStrategy witness_for_parity(const CommGraph& g,
                                         const ParityFunction& parity) {
  const int m = g.m();
  const DependencyProfile prof = dependency_sets(g);
  std::vector<std::uint8_t> f(std::size_t(1) << m);
  for (std::uint32_t x = 0; x < f.size(); ++x) f[x] = parity.bit(x);
  anf_transform(f, m);
  std::vector<std::vector<std::uint16_t>> monomials(static_cast<std::size_t>(m));
  for (std::uint32_t t = 0; t < f.size(); ++t) {
    if (!f[t]) continue;
    int party = 0;
    for (int i = 1; i <= m; ++i) {
      if ((t & ~std::uint32_t(prof.dep[i - 1])) == 0) {
        party = i;
        break;
      }
    }
    if (party == 0)
      throw std::logic_error("parity function left the achievable span");
    monomials[party - 1].push_back(static_cast<std::uint16_t>(t));
  }
  return strategy_from_monomials(g, monomials);
}

struct BruteState {
  // contribution words flattened per party, already masked to the coefficient
  // support: words for table t of party i live at contrib[i][t * nwords .. ]
  std::vector<std::vector<std::uint64_t>> contrib;
  std::vector<std::size_t> counts;
  std::size_t nwords = 0;
  bool narrow = false;  // the whole masked word fits in 16 bits
  std::vector<std::uint64_t> target;  // sign word, masked to the support
};

// serial sweep over parties level.. for one fixed prefix XOR, minimizing the
// distance; everything is pre-masked so the leaf is XOR + popcount
void brute_recurse(const BruteState& st, std::size_t level, const std::uint64_t* acc,
                   std::vector<std::uint64_t>& scratch, int& best) {
  const std::size_t nw = st.nwords;
  if (level + 1 == st.counts.size()) {
    const std::uint64_t* words = st.contrib[level].data();
    const std::uint8_t* pc = detail::popcount16_table();
    if (nw == 1) {
      const std::uint64_t h = acc[0] ^ st.target[0];
      if (st.narrow) {
        for (std::size_t t = 0; t < st.counts[level]; ++t) {
          const int d = pc[(h ^ words[t]) & 0xffffu];
          if (d < best) best = d;
        }
      } else {
        for (std::size_t t = 0; t < st.counts[level]; ++t) {
          const std::uint64_t v = h ^ words[t];
          const int d = pc[v & 0xffffu] + pc[(v >> 16) & 0xffffu] +
                        pc[(v >> 32) & 0xffffu] + pc[(v >> 48) & 0xffffu];
          if (d < best) best = d;
        }
      }
    } else {
      for (std::size_t t = 0; t < st.counts[level]; ++t) {
        int d = 0;
        for (std::size_t w = 0; w < nw; ++w)
          d += popcount64(acc[w] ^ words[t * nw + w] ^ st.target[w]);
        if (d < best) best = d;
      }
    }
    return;
  }
  std::uint64_t* mine = scratch.data() + level * nw;
  for (std::size_t t = 0; t < st.counts[level]; ++t) {
    for (std::size_t w = 0; w < nw; ++w)
      mine[w] = acc[w] ^ st.contrib[level][t * nw + w];
    brute_recurse(st, level + 1, mine, scratch, best);
  }
}

}  // namespace

GraphMaximum max_over_graph(const CommGraph& g, const CoefficientTable& coeffs,
                            int dim_cap) {
  if (g.m() != coeffs.m)
    throw std::invalid_argument("graph and coefficients disagree on the party count");
  const int m = g.m();
  const ParitySubspace basis = parity_basis(g);
  const int dim = basis.dimension();
  if (dim > dim_cap)
    throw capacity_error("parity subspace dimension " + std::to_string(dim) +
                             " exceeds the enumeration cap " + std::to_string(dim_cap),
                         static_cast<std::uint64_t>(dim),
                         static_cast<std::uint64_t>(dim_cap));
  if (dim > 62)
    throw capacity_error("parity subspace dimension " + std::to_string(dim) +
                             " exceeds the enumerable range",
                         static_cast<std::uint64_t>(dim), 62);

  const std::size_t nbits = std::size_t(1) << m;
  const std::size_t nwords = (nbits + 63) / 64;
  std::vector<std::uint64_t> gens(static_cast<std::size_t>(dim) * nwords);
  for (int i = 0; i < dim; ++i) {
    const ParityFunction w = monomial_word(m, basis.monomials[static_cast<std::size_t>(i)]);
    std::copy(w.words().begin(), w.words().end(), gens.begin() + i * nwords);
  }
  const std::vector<std::uint64_t> target = coeffs.sign_word();
  const std::vector<std::uint64_t> sup = coeffs.support_word();
  int support_size = 0;
  for (const std::uint64_t w : sup) support_size += popcount64(w);

  std::vector<std::uint64_t> cur(nwords, 0), best(nwords, 0);
  int best_d = masked_distance(cur.data(), target.data(), sup.data(), nwords);
  const std::uint64_t total = std::uint64_t(1) << dim;
  if (nwords == 1) {
    std::uint64_t c = 0, b = 0;
    const std::uint64_t t0 = target[0], s0 = sup[0];
    const std::uint8_t* pc = detail::popcount16_table();
    for (std::uint64_t it = 1; it < total; ++it) {
      c ^= gens[static_cast<std::size_t>(std::countr_zero(it))];
      const std::uint64_t v = (c ^ t0) & s0;
      const int d = pc[v & 0xffffu] + pc[(v >> 16) & 0xffffu] +
                    pc[(v >> 32) & 0xffffu] + pc[(v >> 48) & 0xffffu];
      if (d < best_d || (d == best_d && c < b)) {
        best_d = d;
        b = c;
      }
    }
    best[0] = b;
  } else {
    for (std::uint64_t it = 1; it < total; ++it) {
      const std::size_t flip = static_cast<std::size_t>(std::countr_zero(it));
      for (std::size_t w = 0; w < nwords; ++w) cur[w] ^= gens[flip * nwords + w];
      const int d = masked_distance(cur.data(), target.data(), sup.data(), nwords);
      if (d < best_d ||
          (d == best_d && word_less(cur.data(), best.data(), nwords))) {
        best_d = d;
        best = cur;
      }
    }
  }

  GraphMaximum out;
  out.value = coeffs.magnitude() * ExactScalar::integer(support_size - 2 * best_d);
  out.best_parity = ParityFunction(m, std::move(best));
  out.witness = witness_for_parity(g, out.best_parity);
  return out;
}

ExactScalar brute_force_max(const CommGraph& g, const CoefficientTable& coeffs,
                            std::uint64_t cap) {
  if (g.m() != coeffs.m)
    throw std::invalid_argument("graph and coefficients disagree on the party count");
  const int m = g.m();
  const DependencyProfile prof = dependency_sets(g);

  // strategy count is prod_i 2^(2^|Dep(i)|); work in the exponent
  std::uint64_t exp_total = 0;
  for (int i = 0; i < m; ++i) exp_total += std::uint64_t(1) << std::popcount(prof.dep[i]);
  if (exp_total > 62 || (std::uint64_t(1) << exp_total) > cap) {
    const std::string need =
        exp_total > 62 ? "2^" + std::to_string(exp_total)
                       : std::to_string(std::uint64_t(1) << exp_total);
    throw capacity_error("brute force needs " + need + " strategies, cap is " +
                             std::to_string(cap),
                         exp_total > 62 ? std::uint64_t(-1)
                                        : std::uint64_t(1) << exp_total,
                         cap);
  }
  const std::uint64_t total = std::uint64_t(1) << exp_total;

  const std::size_t nbits = std::size_t(1) << m;
  BruteState st;
  st.nwords = (nbits + 63) / 64;
  st.narrow = nbits <= 16;
  st.target = coeffs.sign_word();
  const std::vector<std::uint64_t> sup = coeffs.support_word();
  for (std::size_t w = 0; w < st.nwords; ++w) st.target[w] &= sup[w];
  int support_size = 0;
  for (const std::uint64_t w : sup) support_size += popcount64(w);

  // parties ordered by table count ascending, so the largest loop is the
  // innermost tight one
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(prof.dep[a]) < std::popcount(prof.dep[b]);
  });

  st.counts.resize(static_cast<std::size_t>(m));
  st.contrib.resize(static_cast<std::size_t>(m));
  for (int lvl = 0; lvl < m; ++lvl) {
    const int party = order[static_cast<std::size_t>(lvl)];
    const std::uint16_t dep = prof.dep[party];
    const int arity = std::popcount(dep);
    const std::size_t ntables = std::size_t(1) << (std::size_t(1) << arity);
    st.counts[lvl] = ntables;
    st.contrib[lvl].assign(ntables * st.nwords, 0);
    for (std::size_t t = 0; t < ntables; ++t) {
      std::uint64_t* w = st.contrib[lvl].data() + t * st.nwords;
      for (std::uint32_t x = 0; x < nbits; ++x) {
        if ((t >> detail::extract_bits(x, dep)) & 1u)
          w[x >> 6] |= std::uint64_t(1) << (x & 63u);
      }
      for (std::size_t k = 0; k < st.nwords; ++k) w[k] &= sup[k];
    }
  }

  int best_d = support_size;  // distance can never exceed the support
  const std::vector<std::uint64_t> zero(st.nwords, 0);

  if (total < (std::uint64_t(1) << 26) || m < 2) {
    std::vector<std::uint64_t> scratch(st.counts.size() * st.nwords);
    brute_recurse(st, 0, zero.data(), scratch, best_d);
  } else {
    // split the two outermost levels across threads; every unit is the same
    // size, and min() makes the merge order irrelevant
    const std::size_t units = st.counts[0] * st.counts[1];
    const unsigned nthreads =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()), 8u);
    std::vector<int> results(nthreads, support_size);
    std::vector<std::thread> pool;
    for (unsigned ti = 0; ti < nthreads; ++ti) {
      pool.emplace_back([&, ti] {
        std::vector<std::uint64_t> acc(st.nwords);
        std::vector<std::uint64_t> scratch(st.counts.size() * st.nwords);
        int local = support_size;
        for (std::size_t u = ti; u < units; u += nthreads) {
          const std::size_t t0 = u / st.counts[1];
          const std::size_t t1 = u % st.counts[1];
          for (std::size_t w = 0; w < st.nwords; ++w)
            acc[w] = st.contrib[0][t0 * st.nwords + w] ^ st.contrib[1][t1 * st.nwords + w];
          brute_recurse(st, 2, acc.data(), scratch, local);
        }
        results[ti] = local;
      });
    }
    for (auto& th : pool) th.join();
    for (const int r : results) best_d = std::min(best_d, r);
  }

  return coeffs.magnitude() * ExactScalar::integer(support_size - 2 * best_d);
}

}  // namespace svet
