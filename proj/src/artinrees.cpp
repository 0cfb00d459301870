#include "arck/artinrees.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

#include "arck/error.hpp"
#include "arck/textio.hpp"

namespace arck {

RingPtr quotient_ring(const Ideal& j) {
  std::vector<Polynomial> q = j.ring()->quotient();
  q.insert(q.end(), j.generators().begin(), j.generators().end());
  return RingPresentation::create(j.ambient(), std::move(q));
}

Ideal extend(const Ideal& i, const RingPtr& target) {
  if (!i.ambient()->same_as(*target->ambient())) throw ContractError("extension across different ambient rings");
  return Ideal(target, i.generators());
}

namespace {

// I^k ∩ J for each k, computed at most once and shared across threads.
class PowerIntersections {
 public:
  PowerIntersections(const Ideal& i, const Ideal& j, unsigned nmax) : i_(i), j_(j), slots_(nmax + 1) {}

  const Ideal& get(unsigned k) {
    Slot& s = slots_.at(k);
    std::call_once(s.once, [&] { s.value = k == 0 ? j_ : intersect(i_.power(k), j_); });
    return *s.value;
  }

 private:
  struct Slot {
    std::once_flag once;
    std::optional<Ideal> value;
  };
  Ideal i_, j_;
  std::vector<Slot> slots_;
};

ArCheck strong_cell(const Ideal& i, const Ideal& lhs, const Ideal& lower, unsigned h, unsigned n) {
  Ideal rhs = product(i.power(n - h), lower);
  if (auto bad = first_non_member(rhs, lhs))
    throw InternalError("I^(n-h)(I^h ∩ J) is not contained in I^n ∩ J: " + format_polynomial(*bad));
  ArCheck out;
  out.witness = first_non_member(lhs, rhs);
  out.holds = !out.witness;
  return out;
}

void require_order(unsigned h, unsigned n) {
  if (h > n) throw ContractError("Artin-Rees check needs h <= n (h=" + std::to_string(h) + ", n=" + std::to_string(n) + ")");
}

}  // namespace

ArCheck check_strong_ar(const Ideal& i, const Ideal& j, unsigned h, unsigned n) {
  require_order(h, n);
  Ideal lhs = intersect(i.power(n), j);
  Ideal lower = h == 0 ? j : intersect(i.power(h), j);
  return strong_cell(i, lhs, lower, h, n);
}

ArCheck check_weak_ar(const Ideal& i, const Ideal& j, unsigned h, unsigned n) {
  require_order(h, n);
  Ideal lhs = intersect(i.power(n), j);
  Ideal rhs = product(i.power(n - h), j);
  ArCheck out;
  out.witness = first_non_member(lhs, rhs);
  out.holds = !out.witness;
  return out;
}

ArReport find_ar_table(const Ideal& i, const Ideal& j, unsigned nmax, unsigned threads) {
  if (nmax < 1) throw ContractError("find_ar_table needs nmax >= 1");
  ArReport report;
  report.nmax = nmax;
  report.cells.resize(nmax + 1);
  for (unsigned n = 1; n <= nmax; ++n) report.cells[n].resize(n + 1);

  std::vector<std::pair<unsigned, unsigned>> work;
  for (unsigned n = 1; n <= nmax; ++n)
    for (unsigned h = 0; h <= n; ++h) work.emplace_back(n, h);

  PowerIntersections caps(i, j, nmax);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr fatal;
  std::string resource_reason;

  auto worker = [&] {
    while (true) {
      std::size_t k = next.fetch_add(1);
      if (k >= work.size()) return;
      auto [n, h] = work[k];
      ArCell& cell = report.cells[n][h];
      try {
        if (h == n) {
          // I^0 (I^n ∩ J) is the left side itself.
          cell.holds = true;
        } else {
          ArCheck c = strong_cell(i, caps.get(n), caps.get(h), h, n);
          cell.holds = c.holds;
          cell.witness = std::move(c.witness);
        }
        cell.evaluated = true;
      } catch (const ResourceError& e) {
        std::lock_guard lock(error_mutex);
        if (resource_reason.empty()) resource_reason = e.what();
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!fatal) fatal = std::current_exception();
      }
    }
  };

  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (fatal) std::rethrow_exception(fatal);

  report.minimal_h.assign(nmax + 1, std::nullopt);
  for (unsigned n = 1; n <= nmax; ++n) {
    const auto& row = report.cells[n];
    bool row_complete = std::all_of(row.begin(), row.end(), [](const ArCell& c) { return c.evaluated; });
    if (!row_complete) report.complete = false;
    for (unsigned h = 0; h <= n; ++h) {
      if (row[h].evaluated && row[h].holds) {
        if (!report.minimal_h[n] && row_complete) report.minimal_h[n] = h;
      } else if (row[h].evaluated && row[h].witness) {
        report.witnesses.push_back({n, h, *row[h].witness});
      }
    }
    // Once h works at exponent n every larger h <= n does too.
    if (row_complete)
      for (unsigned h = *report.minimal_h[n]; h <= n; ++h)
        if (!row[h].holds) throw InternalError("Artin-Rees table is not monotone in h");
  }
  if (!report.complete) {
    report.incomplete_reason = resource_reason.empty() ? "resource cap exceeded" : resource_reason;
    return report;
  }
  for (unsigned h = 0; h <= nmax; ++h) {
    bool ok = true;
    for (unsigned n = std::max(h, 1u); n <= nmax && ok; ++n) ok = report.cells[n][h].holds;
    if (ok) {
      report.uniform_h = h;
      break;
    }
  }
  return report;
}

bool check_lemma_first(const Ideal& n1, const Ideal& n2, unsigned h, unsigned n) {
  if (h >= n) throw ContractError("lemma check needs h < n");
  Ideal m = Ideal::maximal(n1.ring());
  Ideal lhs = intersect(n1, sum(n2, m.power(n)));
  Ideal rhs = sum(intersect(n1, n2), product(m.power(n - h), n1));
  return is_subset(lhs, rhs);
}

std::optional<unsigned> least_lemma_first_h(const Ideal& n1, const Ideal& n2, unsigned n) {
  for (unsigned h = 0; h < n; ++h)
    if (check_lemma_first(n1, n2, h, n)) return h;
  return std::nullopt;
}

std::optional<Polynomial> find_reduction_element(const Ideal& i, unsigned n, unsigned attempts, std::uint64_t seed) {
  if (n < 1) throw ContractError("reduction element search needs n >= 1");
  if (!is_m_primary(i)) throw ContractError("reduction element search needs an m-primary ideal");
  const auto& gens = i.generators();
  const auto& ring = i.ambient();
  Ideal target = i.power(n);
  Ideal lower = i.power(n - 1);
  auto works = [&](const Polynomial& y) {
    if (y.is_zero()) return false;
    return equal(target, product(Ideal(i.ring(), {y}), lower));
  };
  unsigned tried = 0;
  for (const auto& g : gens) {
    if (tried++ >= attempts) return std::nullopt;
    if (works(g)) return g;
  }
  std::string key;
  for (const auto& g : gens) key += format_polynomial(g) + ";";
  std::mt19937_64 rng(std::hash<std::string>{}(key) ^ seed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  while (tried++ < attempts) {
    Polynomial y(ring);
    for (const auto& g : gens) y += g.scaled(Coeff::from_int(ring->field(), coeff(rng)));
    if (works(y)) return i.ring()->reduce(y);
  }
  return std::nullopt;
}

namespace {

void monomials_up_to(std::size_t nvars, std::size_t var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == nvars) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur.set(var, e);
    monomials_up_to(nvars, var + 1, remaining - e, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::size_t hilbert_samuel(const RingPtr& ring, unsigned n) {
  const auto& ambient = ring->ambient();
  std::vector<Polynomial> gens = ring->quotient();
  std::vector<Monomial> low;
  Monomial cur(ambient->nvars());
  monomials_up_to(ambient->nvars(), 0, static_cast<int>(n) + 1, cur, low);
  for (const auto& m : low)
    if (m.total_degree() == static_cast<long>(n) + 1)
      gens.push_back(Polynomial::monomial(ambient, Coeff::one(ambient->field()), m));
  GroebnerBasis g = buchberger(gens, ambient);
  std::size_t count = 0;
  for (const auto& m : low) {
    if (m.total_degree() > static_cast<long>(n)) continue;
    bool standard = std::none_of(g.elements().begin(), g.elements().end(),
                                 [&](const Polynomial& b) { return b.leading_monomial().divides(m); });
    if (standard) ++count;
  }
  return count;
}

unsigned multiplicity(const RingPtr& ring) {
  constexpr unsigned kHorizon = 24;
  std::vector<long> diffs;
  long prev = static_cast<long>(hilbert_samuel(ring, 0));
  if (prev == 0) throw ContractError("multiplicity of the zero ring");
  for (unsigned n = 1; n <= kHorizon; ++n) {
    long cur = static_cast<long>(hilbert_samuel(ring, n));
    diffs.push_back(cur - prev);
    prev = cur;
    std::size_t k = diffs.size();
    if (k >= 3 && diffs[k - 1] == diffs[k - 2] && diffs[k - 2] == diffs[k - 3]) {
      if (diffs[k - 1] == 0) throw ContractError("dimension != 1: the ring is Artinian");
      return static_cast<unsigned>(diffs[k - 1]);
    }
  }
  throw ContractError("dimension != 1 or horizon too small");
}

namespace {

struct TorsionData {
  Ideal saturation;
  std::size_t length;
};

TorsionData torsion(const Ideal& j) {
  if (!j.is_homogeneous()) {
    for (const auto& g : j.lifted_generators())
      if (!g.is_homogeneous())
        throw ContractError("generator is not homogeneous for the ring weights: " + format_polynomial(g));
  }
  Ideal m = Ideal::maximal(j.ring());
  Ideal sat = saturate(j, m);
  if (equal(sat, j)) return {sat, 0};
  // m^k kills sat/J, so sat/J vanishes above (max generator degree of sat) + k * (max weight).
  unsigned k = 1;
  while (!is_subset(product(m.power(k), sat), j)) {
    if (++k > 64) throw ResourceError("no power of m up to 64 annihilates the torsion");
  }
  long top = 0;
  for (const auto& g : sat.generators()) top = std::max(top, g.weighted_degree());
  const auto& w = j.ambient()->weights();
  top += static_cast<long>(k) * *std::max_element(w.begin(), w.end());
  std::size_t length = 0;
  for (long d = 0; d <= top; ++d) length += graded_dim(j, d) - graded_dim(sat, d);
  return {sat, length};
}

}  // namespace

std::size_t h0_length(const Ideal& j) { return torsion(j).length; }

TheoremBound theorem_bound(const Ideal& j) {
  TorsionData t = torsion(j);
  if (t.saturation.is_unit()) throw ContractError("R/J has dimension 0; the bound needs dim R/J = 1");
  TheoremBound b;
  b.h0_length = t.length;
  b.cohen_macaulay = t.length == 0;
  b.r = multiplicity(quotient_ring(t.saturation));
  if (b.cohen_macaulay) b.bound = b.r;
  return b;
}

namespace {

std::string tag_name(const PolyRing& ring, const std::string& base) {
  std::string name = base;
  while (ring.var_index(name) >= 0) name = "@" + name;
  return name;
}

std::vector<Polynomial> minimize_generators(const Ideal& i) {
  std::vector<Polynomial> gens = i.generators();
  std::stable_sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.weighted_degree() < b.weighted_degree();
  });
  std::vector<Polynomial> kept;
  for (auto& g : gens) {
    if (!kept.empty() && member(g, Ideal(i.ring(), kept))) continue;
    kept.push_back(std::move(g));
  }
  return kept;
}

unsigned t_degree(const Monomial& m, std::size_t tags) {
  unsigned d = 0;
  for (std::size_t v = 0; v < tags; ++v) d += static_cast<unsigned>(m[v]);
  return d;
}

}  // namespace

ReltypeReport reltype(const Ideal& i) {
  if (i.is_zero()) throw ContractError("relation type of the zero ideal");
  ReltypeReport report;
  report.minimal_generators = minimize_generators(i);
  const auto& gens = report.minimal_generators;
  const auto& ambient = i.ambient();
  const std::size_t m = gens.size();
  const std::size_t r = ambient->nvars();

  // Graph ring [t | T1..Tm | x..] and kernel ring [T1..Tm | x..].
  std::vector<std::string> kvars;
  for (std::size_t k = 0; k < m; ++k) kvars.push_back(tag_name(*ambient, "T" + std::to_string(k + 1)));
  kvars.insert(kvars.end(), ambient->vars().begin(), ambient->vars().end());
  std::vector<int> kweights(m, 1);
  kweights.insert(kweights.end(), ambient->weights().begin(), ambient->weights().end());
  std::vector<int> korder_weights(m, 1);
  korder_weights.insert(korder_weights.end(), ambient->order().weights().begin(), ambient->order().weights().end());

  std::vector<std::string> gvars{tag_name(*ambient, "t")};
  gvars.insert(gvars.end(), kvars.begin(), kvars.end());
  std::vector<int> gweights{1};
  gweights.insert(gweights.end(), kweights.begin(), kweights.end());
  std::vector<int> gorder_weights{1};
  gorder_weights.insert(gorder_weights.end(), korder_weights.begin(), korder_weights.end());

  auto graph_ring = std::make_shared<const PolyRing>(
      ambient->field(), gvars, gweights, MonomialOrder(ambient->order().kind(), gorder_weights, {1, m}),
      ambient->degree_cap());
  auto kernel_ring = std::make_shared<const PolyRing>(
      ambient->field(), kvars, kweights, MonomialOrder(ambient->order().kind(), korder_weights, {m}),
      ambient->degree_cap());
  report.rees_ring = kernel_ring;

  std::vector<int> into_graph(r);
  for (std::size_t v = 0; v < r; ++v) into_graph[v] = static_cast<int>(1 + m + v);
  Polynomial t = Polynomial::variable(graph_ring, 0);
  std::vector<Polynomial> graph;
  for (std::size_t k = 0; k < m; ++k)
    graph.push_back(Polynomial::variable(graph_ring, 1 + k) - t * remap(gens[k], graph_ring, into_graph));
  for (const auto& q : i.ring()->quotient()) graph.push_back(remap(q, graph_ring, into_graph));

  GroebnerBasis elim = eliminate(buchberger(graph, graph_ring), 1);
  std::vector<int> drop_t(1 + m + r);
  drop_t[0] = -1;
  for (std::size_t v = 1; v < drop_t.size(); ++v) drop_t[v] = static_cast<int>(v - 1);

  unsigned top = 0;
  for (const auto& f : elim.elements()) {
    Polynomial g = remap(f, kernel_ring, drop_t);
    unsigned d = t_degree(g.leading_monomial(), m);
    for (const auto& term : g.terms())
      if (t_degree(term.mono, m) != d) throw InternalError("Rees kernel element is not homogeneous in T");
    top = std::max(top, d);
    report.kernel.push_back(std::move(g));
    report.kernel_degrees.push_back(d);
  }

  report.reltype = 1;
  for (unsigned d = 1; d <= std::max(top, 1u); ++d) {
    std::vector<Polynomial> low;
    std::vector<const Polynomial*> high;
    for (std::size_t k = 0; k < report.kernel.size(); ++k) {
      if (report.kernel_degrees[k] <= d)
        low.push_back(report.kernel[k]);
      else
        high.push_back(&report.kernel[k]);
    }
    bool generated = true;
    if (!high.empty()) {
      GroebnerBasis lg = buchberger(low, kernel_ring);
      for (const auto* f : high)
        if (!normal_form(*f, lg).is_zero()) {
          generated = false;
          break;
        }
    }
    if (generated) {
      report.reltype = d;
      break;
    }
  }
  for (std::size_t k = 0; k < report.kernel.size(); ++k)
    if (report.kernel_degrees[k] >= 1 && report.kernel_degrees[k] <= report.reltype)
      report.certificate.push_back(report.kernel[k]);
  return report;
}

LemmaCheck check_relationtype_lemma(const Ideal& i, const Ideal& j, unsigned h, unsigned nmax) {
  if (h == 0) throw ContractError("relation-type lemma needs h > 0");
  LemmaCheck out;
  out.h = h;
  Ideal reduced = extend(i, quotient_ring(j));
  out.reltype = reduced.is_zero() ? 1 : reltype(reduced).reltype;
  if (h < out.reltype)
    throw ContractError("h=" + std::to_string(h) + " is below reltype(I R/J)=" + std::to_string(out.reltype));
  if (nmax <= h) return out;
  PowerIntersections caps(i, j, nmax);
  for (unsigned n = h + 1; n <= nmax; ++n) {
    ArCheck c = strong_cell(i, caps.get(n), caps.get(h), h, n);
    if (!c.holds) {
      out.holds = false;
      out.failing_n = n;
      out.witness = std::move(c.witness);
      return out;
    }
  }
  return out;
}

namespace {

struct ExampleRing {
  RingPtr ring;
  Polynomial x, y, z;
};

ExampleRing example_ring(const Field& field, std::vector<int> weights, const char* quotient) {
  auto ambient = make_ring(field, {"x", "y", "z"}, weights, OrderKind::WeightedGRevLex);
  Polynomial x = Polynomial::variable(ambient, 0);
  Polynomial y = Polynomial::variable(ambient, 1);
  Polynomial z = Polynomial::variable(ambient, 2);
  Polynomial q = std::string(quotient) == "z^2" ? z * z : x * z;
  return {RingPresentation::create(ambient, {q}), x, y, z};
}

void evaluate(ExampleVerdict& v, unsigned n) {
  Ideal lhs = intersect(v.family_ideal.power(n), v.j);
  v.in_power_cap_j = member(v.xi, lhs);
  Ideal rhs = product(v.family_ideal, intersect(v.family_ideal.power(n - 1), v.j));
  v.in_product = member(v.xi, rhs);
}

}  // namespace

ExampleVerdict verify_example1(unsigned n, Field field) {
  if (n < 2) throw ContractError("example1 needs n >= 2");
  if (!field.is_rational() && field.characteristic() <= n)
    throw ContractError("example1 needs characteristic > n (binomial coefficient n must be a unit); got p=" +
                        std::to_string(field.characteristic()) + ", n=" + std::to_string(n));
  const int ni = static_cast<int>(n);
  auto [ring, x, y, z] = example_ring(field, {1, 1, ni}, "z^2");
  ExampleVerdict v;
  v.n = n;
  v.ring = ring;
  Polynomial lead = x.pow(n - 1) * y + z;
  v.family_ideal = Ideal(ring, {x.pow(n), y.pow(n), lead});
  v.j = Ideal(ring, {z});
  v.xi = x.pow((n - 1) * (n - 1)) * y.pow(n - 1) * z;
  Polynomial diff = lead.pow(n) - x.pow(n * (n - 1)) * y.pow(n) - v.xi.scaled(Coeff::from_int(field, ni));
  v.identity_holds = ring->reduce(diff).is_zero();
  evaluate(v, n);
  return v;
}

ExampleVerdict verify_example2(unsigned n, Field field) {
  if (n < 2) throw ContractError("example2 needs n >= 2");
  auto [ring, x, y, z] = example_ring(field, {1, 1, 1}, "xz");
  ExampleVerdict v;
  v.n = n;
  v.ring = ring;
  Polynomial lead = x.pow(n - 1) * y + z.pow(n);
  v.family_ideal = Ideal(ring, {x.pow(n), y.pow(n), lead});
  v.j = Ideal(ring, {z});
  v.xi = z.pow(n * n);
  Polynomial diff = lead.pow(n) - x.pow(n * (n - 1)) * y.pow(n) - v.xi;
  v.identity_holds = ring->reduce(diff).is_zero();
  evaluate(v, n);
  return v;
}

}  // namespace arck
