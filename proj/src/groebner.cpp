#include <algorithm>
#include <map>

#include "arrmi/error.hpp"
#include "arrmi/ideal.hpp"

namespace arrmi {

namespace {

struct Descending {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order.greater(a, b); }
};

using WorkPoly = std::map<Monomial, Rat, Descending>;

// Picks the reducer with the fewest terms whose leading monomial divides m.
const Poly* find_reducer(const Monomial& m, const std::vector<const Poly*>& reducers) {
  const Poly* best = nullptr;
  for (const Poly* g : reducers)
    if (g->leading_monomial().divides(m) && (!best || g->size() < best->size())) best = g;
  return best;
}

void subtract_multiple(WorkPoly& work, const Poly& g, const Monomial& shift, const Rat& factor) {
  for (const auto& t : g.terms()) {
    const Monomial m = t.mono * shift;
    auto [it, inserted] = work.try_emplace(m);
    it->second -= factor * t.coef;
    if (sgn(it->second) == 0) work.erase(it);
  }
}

Poly reduce(const Poly& f, const std::vector<const Poly*>& reducers, MonomialOrder order) {
  WorkPoly work(Descending{order});
  for (const auto& t : f.terms()) work.emplace(t.mono, t.coef);
  std::vector<Term> done;
  while (!work.empty()) {
    auto it = work.begin();
    if (const Poly* g = find_reducer(it->first, reducers)) {
      const Monomial shift = g->leading_monomial().divided_into(it->first);
      const Rat factor = it->second / g->leading_coef();
      subtract_multiple(work, *g, shift, factor);
    } else {
      done.push_back({it->first, std::move(it->second)});
      work.erase(it);
    }
  }
  return Poly::from_terms(std::move(done), order);
}

// Primitive polynomial over Z with positive leading coefficient, terms in
// descending order. Buchberger runs on these to avoid rational gcds.
struct ZTerm {
  Monomial mono;
  BigInt coef;
};
using ZPoly = std::vector<ZTerm>;

void make_primitive(ZPoly& f) {
  if (f.empty()) return;
  BigInt g = 0;
  for (const auto& t : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(f.front().coef) < 0) g = -g;
  if (g != 1)
    for (auto& t : f) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), g.get_mpz_t());
}

ZPoly to_zpoly(const Poly& p) {
  BigInt den = 1;
  for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
  ZPoly out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.mono, BigInt(t.coef * den)});
  make_primitive(out);
  return out;
}

Poly to_poly(const ZPoly& f, MonomialOrder order) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f) terms.push_back({t.mono, Rat(t.coef)});
  return Poly::from_terms(std::move(terms), order).monic();
}

// a*f[from_f:] - b*shift*g[from_g:], merged in descending order.
ZPoly combine(const ZPoly& f, std::size_t from_f, const BigInt& a, const ZPoly& g, std::size_t from_g,
              const Monomial& shift, const BigInt& b, const MonomialOrder& order) {
  ZPoly out;
  out.reserve(f.size() - from_f + g.size() - from_g);
  std::size_t i = from_f, j = from_g;
  while (i < f.size() || j < g.size()) {
    Monomial gm;
    if (j < g.size()) gm = g[j].mono * shift;
    const int c = i >= f.size() ? -1 : j >= g.size() ? 1 : order.compare(f[i].mono, gm);
    if (c > 0) {
      out.push_back({f[i].mono, a * f[i].coef});
      ++i;
    } else if (c < 0) {
      out.push_back({gm, -b * g[j].coef});
      ++j;
    } else {
      BigInt v = a * f[i].coef - b * g[j].coef;
      if (sgn(v) != 0) out.push_back({gm, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

const ZPoly* find_zreducer(const Monomial& m, const std::vector<const ZPoly*>& reducers) {
  const ZPoly* best = nullptr;
  for (const ZPoly* g : reducers)
    if (g->front().mono.divides(m) && (!best || g->size() < best->size())) best = g;
  return best;
}

// Full reduction up to a nonzero integer factor.
ZPoly zreduce(ZPoly work, const std::vector<const ZPoly*>& reducers, const MonomialOrder& order) {
  ZPoly done;
  unsigned steps = 0;
  while (!work.empty()) {
    const ZTerm& lead = work.front();
    const ZPoly* g = find_zreducer(lead.mono, reducers);
    if (!g) {
      done.push_back(std::move(work.front()));
      work.erase(work.begin());
      continue;
    }
    const BigInt& lg = g->front().coef;
    BigInt common;
    mpz_gcd(common.get_mpz_t(), lg.get_mpz_t(), lead.coef.get_mpz_t());
    const BigInt a = lg / common, b = lead.coef / common;
    const Monomial shift = g->front().mono.divided_into(lead.mono);
    work = combine(work, 1, a, *g, 1, shift, b, order);
    if (a != 1)
      for (auto& t : done) t.coef *= a;
    if (++steps % 16 == 0) {
      ZPoly all = done;
      all.insert(all.end(), work.begin(), work.end());
      BigInt content = 0;
      for (const auto& t : all) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.coef.get_mpz_t());
      if (content > 1) {
        for (auto& t : done) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), content.get_mpz_t());
        for (auto& t : work) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), content.get_mpz_t());
      }
    }
  }
  make_primitive(done);
  return done;
}

ZPoly s_polynomial(const ZPoly& f, const ZPoly& g, const Monomial& lcm, const MonomialOrder& order) {
  const Monomial mf = f.front().mono.divided_into(lcm);
  const Monomial mg = g.front().mono.divided_into(lcm);
  BigInt common;
  mpz_gcd(common.get_mpz_t(), f.front().coef.get_mpz_t(), g.front().coef.get_mpz_t());
  const BigInt a = g.front().coef / common, b = f.front().coef / common;
  ZPoly shifted_f;
  shifted_f.reserve(f.size());
  for (const auto& t : f) shifted_f.push_back({t.mono * mf, t.coef});
  return combine(shifted_f, 1, a, g, 1, mg, b, order);
}

bool is_constant(const ZPoly& f) { return f.size() == 1 && f.front().mono.is_one(); }

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Buchberger {
 public:
  explicit Buchberger(MonomialOrder order) : order_(order) {}

  // Inputs are interleaved with S-pairs by degree, so a homogeneous input
  // meets a basis that is already complete below its degree.
  void add_input(const Poly& f) { inputs_.push_back(f); }

  // Returns false once the unit ideal has been detected.
  bool run() {
    std::stable_sort(inputs_.begin(), inputs_.end(),
                     [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
    std::size_t next_input = 0;
    while (next_input < inputs_.size() || !pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        if (int c = order_.compare(a.lcm, b.lcm); c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });
      ZPoly h;
      if (next_input < inputs_.size() &&
          (best == pairs_.end() || inputs_[next_input].degree() <= int(best->lcm.degree()))) {
        h = zreduce(to_zpoly(inputs_[next_input++]), active_polys(), order_);
      } else {
        const Pair p = *best;
        pairs_.erase(best);
        h = zreduce(s_polynomial(polys_[p.i], polys_[p.j], p.lcm, order_), active_polys(), order_);
      }
      if (h.empty()) continue;
      if (!insert(std::move(h))) return false;
    }
    return true;
  }

  std::vector<Poly> reduced_basis() const {
    std::vector<const ZPoly*> minimal;
    for (std::size_t k : active_) {
      const Monomial& lm = polys_[k].front().mono;
      bool redundant = false;
      for (std::size_t other : active_) {
        if (other == k) continue;
        const Monomial& olm = polys_[other].front().mono;
        if (olm.divides(lm) && (olm != lm || other < k)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(&polys_[k]);
    }
    std::vector<Poly> out;
    out.reserve(minimal.size());
    for (const ZPoly* g : minimal) {
      std::vector<const ZPoly*> others;
      for (const ZPoly* o : minimal)
        if (o != g) others.push_back(o);
      // The leading term is irreducible, so this reduces the tail only.
      out.push_back(to_poly(zreduce(*g, others, order_), order_));
    }
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
      return order_.greater(a.leading_monomial(), b.leading_monomial());
    });
    return out;
  }

 private:
  std::vector<const ZPoly*> active_polys() const {
    std::vector<const ZPoly*> out;
    out.reserve(active_.size());
    for (std::size_t k : active_) out.push_back(&polys_[k]);
    return out;
  }

  bool insert(ZPoly h) {
    if (is_constant(h)) return false;
    polys_.push_back(std::move(h));
    update(polys_.size() - 1);
    return true;
  }

  // Gebauer-Moeller installation of a new basis element.
  void update(std::size_t hi) {
    const Monomial lh = polys_[hi].front().mono;
    std::vector<Pair> candidates;
    for (std::size_t g : active_) candidates.push_back({g, hi, lh.lcm(polys_[g].front().mono)});

    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool keep = lh.coprime(polys_[p.i].front().mono);
      if (!keep) {
        keep = true;
        for (std::size_t c2 = c + 1; c2 < candidates.size() && keep; ++c2)
          if (candidates[c2].lcm.divides(p.lcm)) keep = false;
        for (const Pair& q : kept)
          if (keep && q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }

    std::vector<Pair> next;
    for (const Pair& p : pairs_) {
      const bool chain = lh.divides(p.lcm) && polys_[p.i].front().mono.lcm(lh) != p.lcm &&
                         polys_[p.j].front().mono.lcm(lh) != p.lcm;
      if (!chain) next.push_back(p);
    }
    for (const Pair& p : kept)
      if (!lh.coprime(polys_[p.i].front().mono)) next.push_back(p);
    pairs_ = std::move(next);

    std::vector<std::size_t> active;
    for (std::size_t g : active_)
      if (!lh.divides(polys_[g].front().mono)) active.push_back(g);
    active.push_back(hi);
    active_ = std::move(active);
  }

  MonomialOrder order_;
  std::vector<Poly> inputs_;
  std::vector<ZPoly> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Poly> groebner(std::vector<Poly> gens, MonomialOrder order) {
  Buchberger bb(order);
  for (auto& g : gens)
    if (!g.is_zero()) bb.add_input(g.with_order(order));
  if (!bb.run()) return {Poly::constant(1, order)};
  return bb.reduced_basis();
}

Poly normal_form(const Poly& p, const std::vector<Poly>& basis) {
  if (basis.empty()) return p;
  const MonomialOrder order = basis.front().order();
  std::vector<const Poly*> reducers;
  reducers.reserve(basis.size());
  for (const auto& g : basis) reducers.push_back(&g);
  return reduce(p.with_order(order), reducers, order);
}

bool all_reduce_to_zero(const std::vector<Poly>& polys, const std::vector<Poly>& basis) {
  if (basis.empty()) return std::all_of(polys.begin(), polys.end(), [](const Poly& p) { return p.is_zero(); });
  const MonomialOrder order = basis.front().order();
  std::vector<ZPoly> zbasis;
  zbasis.reserve(basis.size());
  for (const auto& g : basis) zbasis.push_back(to_zpoly(g));
  std::vector<const ZPoly*> reducers;
  for (const auto& g : zbasis) reducers.push_back(&g);
  for (const auto& p : polys) {
    // Top reduction suffices: an irreducible leading term survives.
    ZPoly work = to_zpoly(p.with_order(order));
    while (!work.empty()) {
      const ZPoly* g = find_zreducer(work.front().mono, reducers);
      if (!g) return false;
      const BigInt& lg = g->front().coef;
      BigInt common;
      mpz_gcd(common.get_mpz_t(), lg.get_mpz_t(), work.front().coef.get_mpz_t());
      const BigInt a = lg / common, b = work.front().coef / common;
      const Monomial shift = g->front().mono.divided_into(work.front().mono);
      work = combine(work, 1, a, *g, 1, shift, b, order);
      make_primitive(work);
    }
  }
  return true;
}

}  // namespace arrmi
