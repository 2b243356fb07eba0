#include "cayley.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>

#include "errors.hpp"
#include "parallel.hpp"

namespace fano_toric {

int CayleyStructure::fiber_of(std::size_t point) const {
  for (std::size_t i = 0; i < fibers.size(); ++i)
    if (fibers[i].contains(point)) return static_cast<int>(i);
  return -1;
}

std::vector<int> CayleyStructure::assignment() const {
  std::vector<int> out(face.universe(), -1);
  for (std::size_t i = 0; i < fibers.size(); ++i)
    for (auto v : fibers[i].elements()) out[v] = static_cast<int>(i);
  return out;
}

CayleyStructure make_cayley_structure(const FaceLattice& lattice, IndexSet face, std::vector<IndexSet> fibers) {
  const auto& config = lattice.configuration();
  std::sort(fibers.begin(), fibers.end(), [&](const IndexSet& x, const IndexSet& y) {
    return config.lex_rank(config.lex_first(x)) < config.lex_rank(config.lex_first(y));
  });
  CayleyStructure p;
  p.face_dim = affine_dimension(config, face);
  p.face = std::move(face);
  p.fibers = std::move(fibers);
  return p;
}

bool preserves_affine_relations(const PointConfiguration& a, const CayleyStructure& p) {
  auto members = p.face.elements();
  const std::size_t m = a.ambient_rank();
  IntMatrix rows(m + 1, IntVector(members.size(), 1));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t c = 0; c < members.size(); ++c) rows[j][c] = a[members[c]][j];
  for (const auto& relation : kernel_basis(rows, members.size())) {
    IntVector image(p.fibers.size(), 0);
    for (std::size_t c = 0; c < members.size(); ++c) {
      int f = p.fiber_of(members[c]);
      if (f < 0) return false;
      image[static_cast<std::size_t>(f)] = checked_add(image[static_cast<std::size_t>(f)], relation[c]);
    }
    if (!is_zero(image)) return false;
  }
  return true;
}

namespace {

bool cayley_less(const PointConfiguration& config, const CayleyStructure& x, const CayleyStructure& y) {
  if (x.face != y.face) return config.lex_less(x.face, y.face);
  return std::lexicographical_compare(x.fibers.begin(), x.fibers.end(), y.fibers.begin(), y.fibers.end(),
                                      [&](const IndexSet& s, const IndexSet& t) { return config.lex_less(s, t); });
}

IntMatrix differences(const PointConfiguration& a, const IndexSet& s) {
  auto idx = s.elements();
  IntMatrix out;
  for (std::size_t i = 1; i < idx.size(); ++i) out.push_back(subtract(a[idx[i]], a[idx[0]]));
  return out;
}

// Blocks of tau whose indicator function is affine on tau: G and tau \ G are
// faces and the two difference lattices together do not span M_tau.
std::vector<IndexSet> candidate_blocks(const FaceLattice& lattice, const Face& tau) {
  const auto& a = lattice.configuration();
  std::vector<IndexSet> out;
  for (const auto& g : lattice.faces()) {
    if (g.members == tau.members || !g.members.is_subset_of(tau.members)) continue;
    IndexSet rest = tau.members - g.members;
    if (!lattice.is_face(rest)) continue;
    IntMatrix span = differences(a, g.members);
    for (auto& row : differences(a, rest)) span.push_back(std::move(row));
    if (static_cast<int>(rank(span)) < tau.dim) out.push_back(g.members);
  }
  return out;
}

class ExactCover {
 public:
  ExactCover(const PointConfiguration& config, const std::vector<IndexSet>& blocks, std::size_t min_blocks,
             std::atomic<std::size_t>& nodes, std::size_t max_nodes)
      : config_(config), blocks_(blocks), min_blocks_(min_blocks), nodes_(nodes), max_nodes_(max_nodes) {}

  std::vector<std::vector<IndexSet>> run(const IndexSet& tau) {
    search(tau);
    return std::move(found_);
  }

 private:
  void search(const IndexSet& uncovered) {
    if (max_nodes_ && ++nodes_ > max_nodes_)
      throw BudgetExceeded("Cayley structure search exceeded budget of " + std::to_string(max_nodes_) + " nodes");
    if (uncovered.empty()) {
      if (chosen_.size() >= min_blocks_) found_.push_back(chosen_);
      return;
    }
    if (chosen_.size() + uncovered.size() < min_blocks_) return;
    const auto pivot = config_.lex_first(uncovered);
    for (const auto& b : blocks_) {
      if (!b.contains(pivot) || !b.is_subset_of(uncovered)) continue;
      chosen_.push_back(b);
      search(uncovered - b);
      chosen_.pop_back();
    }
  }

  const PointConfiguration& config_;
  const std::vector<IndexSet>& blocks_;
  std::size_t min_blocks_;
  std::atomic<std::size_t>& nodes_;
  std::size_t max_nodes_;
  std::vector<IndexSet> chosen_;
  std::vector<std::vector<IndexSet>> found_;
};

}  // namespace

std::vector<CayleyStructure> enumerate_cayley_structures(const FaceLattice& lattice, const CayleyOptions& options) {
  const auto& config = lattice.configuration();
  const int min_length = std::max(options.min_length, 1);
  std::vector<std::size_t> domains;
  for (std::size_t f = 0; f < lattice.faces().size(); ++f)
    if (lattice.faces()[f].dim >= 1) domains.push_back(f);

  std::atomic<std::size_t> nodes{0};
  std::vector<std::vector<CayleyStructure>> per_face(domains.size());
  parallel_for(domains.size(), options.threads, [&](std::size_t i) {
    const auto& tau = lattice.faces()[domains[i]];
    auto blocks = candidate_blocks(lattice, tau);
    ExactCover cover(config, blocks, static_cast<std::size_t>(min_length) + 1, nodes, options.max_nodes);
    for (auto& fibers : cover.run(tau.members)) {
      CayleyStructure p;
      p.face = tau.members;
      p.face_dim = tau.dim;
      p.fibers = std::move(fibers);
      per_face[i].push_back(std::move(p));
    }
  });

  std::vector<CayleyStructure> out;
  for (auto& v : per_face)
    for (auto& p : v) out.push_back(std::move(p));
  std::sort(out.begin(), out.end(),
            [&](const CayleyStructure& x, const CayleyStructure& y) { return cayley_less(config, x, y); });
  return out;
}

bool leq(const CayleyStructure& p, const CayleyStructure& q) {
  if (!p.face.is_subset_of(q.face)) return false;
  for (const auto& fq : q.fibers) {
    IndexSet part = fq & p.face;
    if (part.empty()) continue;
    bool inside = false;
    for (const auto& fp : p.fibers)
      if (part.is_subset_of(fp)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

std::vector<CayleyStructure> maximal_cayley_structures(const FaceLattice& lattice, const CayleyOptions& options) {
  auto all = enumerate_cayley_structures(lattice, options);
  std::map<IndexSet, std::vector<std::size_t>> by_face;
  for (std::size_t i = 0; i < all.size(); ++i) by_face[all[i].face].push_back(i);

  // If p < q with tau_q strictly larger, the restriction of q to a face covering
  // tau_p is an enumerated structure above p, so covering faces suffice.
  std::vector<char> maximal(all.size(), 0);
  parallel_for(all.size(), options.threads, [&](std::size_t i) {
    const auto& p = all[i];
    std::vector<const std::vector<std::size_t>*> candidates{&by_face.at(p.face)};
    for (const auto& g : lattice.faces())
      if (g.dim == p.face_dim + 1 && p.face.is_subset_of(g.members)) {
        auto it = by_face.find(g.members);
        if (it != by_face.end()) candidates.push_back(&it->second);
      }
    for (const auto* list : candidates)
      for (auto j : *list)
        if (j != i && leq(p, all[j])) return;
    maximal[i] = 1;
  });
  std::vector<CayleyStructure> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (maximal[i]) out.push_back(std::move(all[i]));
  return out;
}

CayleyStructure restrict_structure(const FaceLattice& lattice, const CayleyStructure& p, const IndexSet& sigma) {
  if (!sigma.is_subset_of(p.face)) throw PreconditionError("restriction to a set outside the face");
  std::vector<IndexSet> fibers;
  for (const auto& f : p.fibers) {
    IndexSet part = f & sigma;
    if (!part.empty()) fibers.push_back(std::move(part));
  }
  return make_cayley_structure(lattice, sigma, std::move(fibers));
}

std::vector<std::size_t> pi_faces(const FaceLattice& lattice, const CayleyStructure& p, int k) {
  if (k > p.length()) throw PreconditionError("k = " + std::to_string(k) + " exceeds the length of the structure");
  std::vector<std::size_t> out;
  for (auto f : lattice.subfaces(p.face, k)) {
    const auto& members = lattice.faces()[f].members;
    if (members.size() != static_cast<std::size_t>(k) + 1) continue;
    bool injective = true;
    for (const auto& fiber : p.fibers)
      if ((fiber & members).size() > 1) injective = false;
    if (injective) out.push_back(f);
  }
  return out;
}

int component_dimension(const CayleyStructure& p, int k) {
  const int l = p.length();
  if (k > l) throw PreconditionError("k = " + std::to_string(k) + " exceeds the length of the structure");
  return p.face_dim - l + (k + 1) * (l - k);
}

std::optional<IntVector> LatticeProjection::apply(const IntVector& u) const {
  auto coords = lattice_coordinates(tau_basis, u);
  if (!coords) return std::nullopt;
  IntVector out(width, 0);
  for (std::size_t j = 0; j < coords->size(); ++j) out = add(out, scale(matrix[j], (*coords)[j]));
  return out;
}

LatticeProjection induced_projection(const PointConfiguration& a, const CayleyStructure& p) {
  LatticeProjection proj;
  proj.tau_basis = difference_lattice_basis(a, p.face);
  const std::size_t r = proj.tau_basis.size();
  const std::size_t width = p.fibers.size();
  proj.width = width;
  auto members = p.face.elements();
  const auto base = members.front();
  const auto base_fiber = static_cast<std::size_t>(p.fiber_of(base));

  IntMatrix coords;
  IntMatrix targets;
  for (auto v : members) {
    coords.push_back(*lattice_coordinates(proj.tau_basis, subtract(a[v], a[base])));
    IntVector t(width, 0);
    t[static_cast<std::size_t>(p.fiber_of(v))] += 1;
    t[base_fiber] -= 1;
    targets.push_back(std::move(t));
  }
  IntMatrix square, rhs;
  if (r == 0) return proj;  // a single point
  for (auto i : independent_rows(coords)) {
    square.push_back(coords[i]);
    rhs.push_back(targets[i]);
  }
  if (square.size() != r) throw InternalError("face differences do not span M_tau");
  auto solution = solve_square(square, rhs);
  if (!solution) throw InternalError("singular system for the induced projection");
  proj.matrix.assign(r, IntVector(width, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < width; ++j) {
      const auto& q = (*solution)[i][j];
      if (q.get_den() != 1) throw InternalError("induced projection is not integral");
      proj.matrix[i][j] = to_int(q.get_num());
    }
  for (std::size_t c = 0; c < members.size(); ++c)
    if (*proj.apply(subtract(a[members[c]], a[base])) != targets[c])
      throw InternalError("fibers are not cut out by an affine map");
  return proj;
}

std::string describe(const PointConfiguration& a, const CayleyStructure& p) {
  std::ostringstream os;
  os << "l=" << p.length() << " on face of dim " << p.face_dim << ": ";
  for (std::size_t i = 0; i < p.fibers.size(); ++i) {
    os << (i ? " | " : "") << '{';
    bool first = true;
    for (auto v : a.sorted_members(p.fibers[i])) {
      os << (first ? "" : " ") << format_vector(a[v]);
      first = false;
    }
    os << '}';
  }
  return os.str();
}

}  // namespace fano_toric
