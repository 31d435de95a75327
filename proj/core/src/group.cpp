#include "polytsg/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "polytsg/error.hpp"

namespace polytsg {

namespace {

// Desk-scale bound: the multiplication table is quadratic in the order.
constexpr std::size_t kMaxOrder = 5000;

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::size_t> parent_;
};

}  // namespace

FiniteGroup FiniteGroup::generate(std::size_t degree, std::vector<Perm> generators) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw Error(Errc::degree_mismatch, "generator degree " +
                                             std::to_string(g.degree()) +
                                             " differs from group degree " +
                                             std::to_string(degree));

  std::set<Perm> seen{Perm::identity(degree)};
  std::deque<Perm> frontier{Perm::identity(degree)};
  while (!frontier.empty()) {
    Perm x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : generators) {
      Perm y = x * s;
      if (seen.insert(y).second) {
        if (seen.size() > kMaxOrder)
          throw Error(Errc::invalid_argument, "group order exceeds desk-scale bound");
        frontier.push_back(std::move(y));
      }
    }
  }

  FiniteGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(generators);
  g.elements_.assign(seen.begin(), seen.end());

  const std::size_t n = g.elements_.size();
  g.table_.resize(n * n);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      g.table_[a * n + b] = g.index_of(g.elements_[a] * g.elements_[b]);

  g.inverses_.resize(n);
  g.orders_.resize(n);
  for (ElementId a = 0; a < n; ++a) {
    g.inverses_[a] = g.index_of(g.elements_[a].inverse());
    std::uint64_t k = 1;
    for (ElementId x = a; x != identity(); x = g.multiply(x, a)) ++k;
    g.orders_[a] = k;
  }
  return g;
}

std::optional<ElementId> FiniteGroup::find(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<ElementId>(it - elements_.begin());
}

ElementId FiniteGroup::index_of(const Perm& p) const {
  if (auto id = find(p)) return *id;
  throw Error(Errc::not_in_group, "permutation " + to_string(p) + " is not a group element");
}

FiniteGroup FiniteGroup::subgroup(std::span<const ElementId> generators) const {
  std::vector<Perm> gens;
  for (ElementId id : generators) gens.push_back(elements_.at(id));
  return generate(degree_, std::move(gens));
}

bool FiniteGroup::contains_group(const FiniteGroup& other) const {
  if (other.degree() != degree_) return false;
  return std::all_of(other.elements().begin(), other.elements().end(),
                     [&](const Perm& p) { return contains(p); });
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<bool> assigned(n, false);
  std::vector<ConjugacyClass> classes;
  for (ElementId g = 0; g < n; ++g) {
    if (assigned[g]) continue;
    ConjugacyClass cls;
    cls.element_order = group.element_order(g);
    for (ElementId x = 0; x < n; ++x) {
      ElementId c = group.conjugate(x, g);
      if (!assigned[c]) {
        assigned[c] = true;
        cls.members.push_back(c);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

FiniteGroup squares_subgroup(const FiniteGroup& group) {
  std::vector<ElementId> squares;
  for (ElementId g = 0; g < group.order(); ++g)
    squares.push_back(group.multiply(g, g));
  std::sort(squares.begin(), squares.end());
  squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
  return group.subgroup(squares);
}

GroupAction::GroupAction(GroupPtr group, std::vector<std::string> labels,
                         std::vector<Perm> images)
    : group_(std::move(group)), labels_(std::move(labels)), images_(std::move(images)) {
  if (!group_) throw Error(Errc::invalid_argument, "null group");
  if (images_.size() != group_->order())
    throw Error(Errc::invalid_argument, "one image per group element required");
  for (const auto& p : images_)
    if (p.degree() != labels_.size())
      throw Error(Errc::invalid_argument, "image degree differs from point count");
}

bool GroupAction::is_homomorphism() const {
  const auto& g = *group_;
  if (!images_[FiniteGroup::identity()].is_identity()) return false;
  for (ElementId a = 0; a < g.order(); ++a)
    for (ElementId b = 0; b < g.order(); ++b)
      if (images_[g.multiply(a, b)] != images_[a] * images_[b]) return false;
  return true;
}

bool GroupAction::is_homomorphism_on_generators() const {
  const auto& g = *group_;
  if (!images_[FiniteGroup::identity()].is_identity()) return false;
  for (const auto& s : g.generators()) {
    ElementId sid = g.index_of(s);
    for (ElementId a = 0; a < g.order(); ++a)
      if (images_[g.multiply(a, sid)] != images_[a] * images_[sid]) return false;
  }
  return true;
}

GroupAction GroupAction::restrict_to(std::span<const Point> points) const {
  constexpr Point kAbsent = ~Point{0};
  std::vector<Point> relabel(degree(), kAbsent);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < points.size(); ++i) {
    relabel.at(points[i]) = static_cast<Point>(i);
    labels.push_back(labels_[points[i]]);
  }
  std::vector<Perm> images;
  images.reserve(images_.size());
  for (const auto& p : images_) {
    std::vector<Point> img(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      Point y = relabel[p(points[i])];
      if (y == kAbsent)
        throw Error(Errc::invalid_argument, "subset is not invariant under the action");
      img[i] = y;
    }
    images.emplace_back(std::move(img));
  }
  return GroupAction(group_, std::move(labels), std::move(images));
}

GroupAction regular_action(GroupPtr group) {
  const auto& g = *group;
  std::vector<std::string> labels;
  for (ElementId x = 0; x < g.order(); ++x) labels.push_back("g" + std::to_string(x));
  std::vector<Perm> images;
  for (ElementId a = 0; a < g.order(); ++a) {
    std::vector<Point> img(g.order());
    for (ElementId x = 0; x < g.order(); ++x)
      img[x] = static_cast<Point>(g.multiply(a, x));
    images.emplace_back(std::move(img));
  }
  return GroupAction(std::move(group), std::move(labels), std::move(images));
}

GroupAction coset_action(GroupPtr group, const FiniteGroup& subgroup) {
  const auto& g = *group;
  if (!g.contains_group(subgroup))
    throw Error(Errc::not_a_subgroup, "coset_action: H is not a subgroup of G");

  std::vector<ElementId> h_ids;
  for (const auto& p : subgroup.elements()) h_ids.push_back(g.index_of(p));

  constexpr std::size_t kUnset = ~std::size_t{0};
  std::vector<std::size_t> coset_of(g.order(), kUnset);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kUnset) continue;
    for (ElementId h : h_ids) coset_of[g.multiply(x, h)] = reps.size();
    reps.push_back(x);
  }

  std::vector<std::string> labels;
  for (std::size_t k = 0; k < reps.size(); ++k)
    labels.push_back("coset" + std::to_string(k));
  std::vector<Perm> images;
  for (ElementId a = 0; a < g.order(); ++a) {
    std::vector<Point> img(reps.size());
    for (std::size_t k = 0; k < reps.size(); ++k)
      img[k] = static_cast<Point>(coset_of[g.multiply(a, reps[k])]);
    images.emplace_back(std::move(img));
  }
  return GroupAction(std::move(group), std::move(labels), std::move(images));
}

std::vector<Point> fixed_points(ElementId g, const GroupAction& action) {
  return action.image(g).fixed_points();
}

std::vector<std::vector<Point>> orbits(const GroupAction& action) {
  DisjointSets sets(action.degree());
  for (ElementId g = 0; g < action.group().order(); ++g) {
    const auto& p = action.image(g);
    for (Point x = 0; x < action.degree(); ++x) sets.unite(x, p(x));
  }
  std::vector<std::vector<Point>> out;
  std::vector<std::size_t> slot(action.degree(), ~std::size_t{0});
  for (Point x = 0; x < action.degree(); ++x) {
    std::size_t root = sets.find(x);
    if (slot[root] == ~std::size_t{0}) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(x);
  }
  return out;
}

OrbitCount orbit_count(const GroupAction& action) {
  OrbitCount result;
  result.group_order = action.group().order();
  result.direct = orbits(action).size();
  for (ElementId g = 0; g < action.group().order(); ++g)
    result.fixed_point_sum += fixed_points(g, action).size();
  return result;
}

}  // namespace polytsg
