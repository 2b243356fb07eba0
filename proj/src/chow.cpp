#include "chow.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "errors.hpp"
#include "parallel.hpp"

namespace fano_toric {

CayleySumConfiguration cayley_sum_configuration(const FaceLattice& lattice, const CayleyStructure& p) {
  const auto& a = lattice.configuration();
  std::vector<std::vector<std::size_t>> fibers;
  for (const auto& f : p.fibers) fibers.push_back(f.elements());
  std::set<IntVector> sums;
  std::vector<std::size_t> pick(fibers.size(), 0);
  while (true) {
    IntVector s(a.ambient_rank(), 0);
    for (std::size_t i = 0; i < fibers.size(); ++i) s = add(s, a[fibers[i][pick[i]]]);
    sums.insert(std::move(s));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == fibers[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  auto normalized = normalize_configuration(PointConfiguration(std::vector<LatticePoint>(sums.begin(), sums.end())));
  return {std::move(normalized.configuration), std::move(normalized.map), p};
}

SplitBundle universal_bundle(const FaceLattice& lattice, const CayleyStructure& p, const CayleySumConfiguration& z,
                             const FaceLattice& z_lattice, std::size_t face_choice) {
  const auto& a = lattice.configuration();
  auto faces = pi_faces(lattice, p, p.length());
  if (face_choice >= faces.size())
    throw PreconditionError("pi-face choice " + std::to_string(face_choice) + " out of range (" +
                            std::to_string(faces.size()) + " available)");
  const auto& sigma = lattice.faces()[faces[face_choice]].members;
  SplitBundle out;
  for (const auto& fiber : p.fibers) {
    const auto v = (sigma & fiber).first();
    out.pi_face.push_back(v);
    std::vector<IntVector> gens;
    for (auto w : fiber.elements()) gens.push_back(z.map.apply_linear(subtract(a[w], a[v])));
    ToricDivisor d;
    for (const auto& f : z_lattice.facets()) {
      Int low = dot(f.normal, gens.front());
      for (const auto& g : gens) low = std::min(low, dot(f.normal, g));
      d.coeffs.push_back(-low);
    }
    out.generators.push_back(std::move(gens));
    out.divisors.push_back(std::move(d));
  }
  return out;
}

Int toric_intersection_number(const FaceLattice& z_lattice, const std::vector<ToricDivisor>& classes) {
  if (!z_lattice.smooth()) throw NotSmoothError("intersection numbers need a smooth toric variety");
  const auto d = static_cast<std::size_t>(z_lattice.dim());
  if (classes.size() != d)
    throw PreconditionError("need " + std::to_string(d) + " classes, got " + std::to_string(classes.size()));
  if (d == 0) return 1;
  // D = P - N with P, N nef; N a multiple of the ample class of the embedding
  const auto ample = embedding_divisor(z_lattice);
  std::vector<LatticePolytope> pos(d);
  std::vector<std::optional<LatticePolytope>> neg(d);
  for (std::size_t i = 0; i < d; ++i) {
    Int t = 0;
    while (!is_basepoint_free(z_lattice, classes[i] + t * ample)) {
      if (++t > 100000) throw InternalError("no nef decomposition found");
    }
    pos[i] = divisor_polytope(z_lattice, classes[i] + t * ample);
    if (t > 0) neg[i] = divisor_polytope(z_lattice, t * ample);
  }
  mpz_class total = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    std::vector<LatticePolytope> chosen;
    bool skip = false;
    int sign = 1;
    for (std::size_t i = 0; i < d && !skip; ++i) {
      if (mask >> i & 1U) {
        if (!neg[i]) skip = true;
        else {
          chosen.push_back(*neg[i]);
          sign = -sign;
        }
      } else {
        chosen.push_back(pos[i]);
      }
    }
    if (skip) continue;
    const auto mv = normalized_mixed_volume(chosen);
    total += sign > 0 ? mv : mpz_class(-mv);
  }
  return to_int(total);
}

namespace {

std::vector<std::vector<int>> compositions(int parts, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == parts - 1) {
      cur[static_cast<std::size_t>(i)] = left;
      out.push_back(cur);
      return;
    }
    for (int x = left; x >= 0; --x) {
      cur[static_cast<std::size_t>(i)] = x;
      rec(i + 1, left - x);
    }
  };
  if (parts > 0) rec(0, total);
  return out;
}

std::vector<std::vector<int>> subsets(int n, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

void check_degrees(int dim_base, int length, int k, const std::vector<int>& deltas) {
  if (k < 0 || k > length) throw PreconditionError("k must lie between 0 and the length");
  Int rank = 0;
  for (int d : deltas) {
    if (d < 0) throw PreconditionError("restriction degrees must be non-negative");
    rank += sym_rank(k, d);
  }
  const Int dim = dim_base + Int{k + 1} * (length - k);
  if (rank != dim)
    throw PreconditionError("degree mismatch: sum of C(k+delta_i, k) is " + std::to_string(rank) +
                            " but the Grassmann bundle has dimension " + std::to_string(dim));
}

struct VertexData {
  std::vector<IntVector> characters;  // w_i(b)
  std::vector<IntVector> edges;
};

constexpr int kRetries = 64;

}  // namespace

mpz_class count_k_planes(const FaceLattice& lattice, const CayleyStructure& p, int k, const std::vector<int>& deltas,
                         const CountOptions& options) {
  if (!lattice.smooth()) throw NotSmoothError("counting needs a smooth configuration");
  const auto z = cayley_sum_configuration(lattice, p);
  const FaceLattice zl(z.points);
  if (!zl.smooth()) throw NotSmoothError("Z_pi is not smooth");
  const int length = p.length();
  check_degrees(zl.dim(), length, k, deltas);
  const auto bundle = universal_bundle(lattice, p, z, zl, options.face_choice);

  // w_i(b): the vertex of conv G_i minimised by a functional interior to the normal cone at b
  std::vector<VertexData> vertices;
  for (auto b : zl.vertices()) {
    VertexData data;
    IntVector c(static_cast<std::size_t>(zl.dim()), 0);
    for (auto f : zl.facets_containing(IndexSet(z.points.size(), {b}))) c = add(c, zl.facets()[f].normal);
    for (const auto& gens : bundle.generators) {
      const IntVector* best = nullptr;
      bool tie = false;
      for (const auto& g : gens) {
        if (!best || dot(c, g) < dot(c, *best)) {
          best = &g;
          tie = false;
        } else if (dot(c, g) == dot(c, *best) && g != *best) {
          tie = true;
        }
      }
      if (tie) throw InternalError("normal fan of Z_pi does not refine a summand");
      data.characters.push_back(*best);
    }
    data.edges = zl.edge_directions(b);
    vertices.push_back(std::move(data));
  }

  const auto choices = subsets(length + 1, k + 1);
  const std::size_t points = vertices.size() * choices.size();
  if (options.max_fixed_points && points > options.max_fixed_points)
    throw BudgetExceeded("fixed-point budget exceeded: " + std::to_string(points) + " > " +
                         std::to_string(options.max_fixed_points));
  std::vector<std::vector<std::vector<int>>> sym;
  for (int d : deltas) sym.push_back(compositions(k + 1, d));

  for (int attempt = 0; attempt < kRetries; ++attempt) {
    std::mt19937_64 gen(options.seed + static_cast<std::uint64_t>(attempt));
    auto draw = [&] { return static_cast<Int>(gen() % 2001) - 1000; };
    IntVector xi(static_cast<std::size_t>(zl.dim())), t(static_cast<std::size_t>(length + 1));
    for (auto& x : xi) x = draw();
    for (auto& x : t) x = draw();

    std::vector<mpq_class> contributions(points);
    std::atomic<bool> degenerate{false};
    parallel_for(points, options.threads, [&](std::size_t idx) {
      const auto& v = vertices[idx / choices.size()];
      const auto& s = choices[idx % choices.size()];
      std::vector<mpz_class> chi(static_cast<std::size_t>(length + 1));  // weight of E_i
      for (std::size_t i = 0; i < chi.size(); ++i) chi[i] = mpz_class(dot(v.characters[i], xi) + t[i]);
      mpz_class den = 1;
      for (const auto& e : v.edges) den *= mpz_class(dot(e, xi));
      std::vector<char> in(chi.size(), 0);
      for (int i : s) in[static_cast<std::size_t>(i)] = 1;
      for (int i : s)
        for (std::size_t j = 0; j < chi.size(); ++j)
          if (!in[j]) den *= chi[j] - chi[static_cast<std::size_t>(i)];
      if (den == 0) {
        degenerate = true;
        return;
      }
      // Chern roots of S^* are -chi_i, i in S
      mpz_class num = 1;
      for (const auto& comps : sym)
        for (const auto& a : comps) {
          mpz_class root = 0;
          for (std::size_t j = 0; j < s.size(); ++j) root -= a[j] * chi[static_cast<std::size_t>(s[j])];
          num *= root;
        }
      contributions[idx] = mpq_class(num, den);
      contributions[idx].canonicalize();
    });
    if (degenerate) continue;
    mpq_class sum = 0;
    for (const auto& c : contributions) sum += c;
    if (sum.get_den() != 1) throw InternalError("localization sum is not an integer: " + sum.get_str());
    return sum.get_num();
  }
  throw InternalError("no generic evaluation vector found after " + std::to_string(kRetries) + " attempts");
}

mpz_class schubert_oracle(int n_plus_1, int k, const std::vector<int>& deltas) {
  const int n = n_plus_1 - 1;
  if (n < 0) throw PreconditionError("rank must be positive");
  check_degrees(0, n, k, deltas);
  const auto vars = static_cast<std::size_t>(k + 1);
  using Poly = std::map<std::vector<int>, mpz_class>;
  Poly f{{std::vector<int>(vars, 0), 1}};
  auto times_linear = [&](const Poly& g, const std::vector<mpz_class>& coef) {
    Poly out;
    for (const auto& [mono, c] : g)
      for (std::size_t j = 0; j < vars; ++j) {
        if (coef[j] == 0) continue;
        auto m = mono;
        ++m[j];
        out[m] += c * coef[j];
      }
    return out;
  };
  for (int d : deltas)
    for (const auto& a : compositions(k + 1, d)) {
      std::vector<mpz_class> coef(a.begin(), a.end());
      f = times_linear(f, coef);
    }
  // Schur coefficient of the full box: coefficient of x^(box + rho) in f times the Vandermonde
  for (std::size_t i = 0; i < vars; ++i)
    for (std::size_t j = i + 1; j < vars; ++j) {
      std::vector<mpz_class> coef(vars, 0);
      coef[i] = 1;
      coef[j] = -1;
      f = times_linear(f, coef);
    }
  std::vector<int> target(vars);
  for (std::size_t i = 0; i < vars; ++i) target[i] = n - static_cast<int>(i);
  auto it = f.find(target);
  return it == f.end() ? mpz_class(0) : it->second;
}

FullCount full_count(const FaceLattice& lattice, const std::vector<ToricDivisor>& classes, int k,
                     const FullCountOptions& options) {
  const CayleyOptions cayley{1, options.max_nodes, options.threads};
  const auto structures = enumerate_cayley_structures(lattice, cayley);
  FullCount out;
  for (const auto& p : maximal_cayley_structures(lattice, cayley)) {
    if (p.length() < k) continue;
    ComponentCount c{p, check_hypotheses({&lattice, p, classes, k},
                                         {HypothesisMode::both, options.threads, structures, options.max_nodes}),
                     std::nullopt, {}};
    if (c.hypotheses.countable) {
      c.count = count_k_planes(lattice, p, k, *c.hypotheses.deltas,
                               {options.seed, options.threads, options.max_fixed_points, 0});
      out.total += *c.count;
    } else {
      c.note = "not counted: " + c.hypotheses.verdict;
      out.complete = false;
    }
    out.components.push_back(std::move(c));
  }
  return out;
}

}  // namespace fano_toric
