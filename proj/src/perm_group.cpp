#include "twg/perm_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace twg {

namespace {

int smallest_moved(const Perm& g) {
  for (int x = 0; x < g.degree(); ++x)
    if (g(x) != x) return x;
  return -1;
}

}  // namespace

// ---------------------------------------------------------------------------
// StabChain

StabChain::StabChain(int degree, const std::vector<Perm>& gens,
                     const std::vector<int>& preferred_base, int base_limit)
    : degree_(degree), base_limit_(base_limit), preferred_base_(preferred_base) {
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("StabChain: degree out of range");
  for (const Perm& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("StabChain: generator degree mismatch");

  for (const Perm& g : gens)
    if (!g.is_identity()) insert_generator(g, 0);

  // Verify Schreier generators level by level; any new strong generator sends
  // verification back to the deepest level it reached. Work on snapshots:
  // insert_generator may grow levels_ and invalidate references, but it never
  // modifies the level currently being verified.
  int i = static_cast<int>(levels_.size()) - 1;
  while (i >= 0) {
    const size_t li = static_cast<size_t>(i);
    const std::vector<int> orbit_snap = levels_[li].orbit;
    const size_t ngens = levels_[li].gens.size();
    int touched = -1;
    for (size_t qi = 0; qi < orbit_snap.size() && touched < 0; ++qi) {
      int x = orbit_snap[qi];
      Perm ux = *levels_[li].transversal[static_cast<size_t>(x)];
      for (size_t si = 0; si < ngens; ++si) {
        Perm s = levels_[li].gens[si];
        Perm uxs = *levels_[li].transversal[static_cast<size_t>(s(x))];
        Perm schreier = compose(compose(ux, s), inverse(uxs));
        if (schreier.is_identity()) continue;
        touched = insert_generator(schreier, li + 1);
        if (touched >= 0) break;
      }
    }
    if (touched < 0)
      --i;
    else
      i = touched;
  }
}

int StabChain::insert_generator(const Perm& g, size_t start_level) {
  Perm r = g;
  size_t l = start_level;
  while (l < levels_.size()) {
    const ChainLevel& lev = levels_[l];
    int x = r(lev.base);
    if (x != lev.base) {
      const auto& u = lev.transversal[static_cast<size_t>(x)];
      if (!u) break;
      r = compose(r, inverse(*u));
    }
    ++l;
  }
  if (r.is_identity()) return -1;

  if (l == levels_.size()) {
    // Extend the base. Preferred points are consumed in order even when the
    // residue fixes them (their level then starts with a trivial orbit).
    for (;;) {
      int base;
      if (levels_.size() < preferred_base_.size()) {
        base = preferred_base_[levels_.size()];
        if (base < 0 || base >= degree_)
          throw std::invalid_argument("StabChain: preferred base out of range");
      } else {
        base = smallest_moved(r);
        if (base_limit_ >= 0 && base >= base_limit_)
          throw std::domain_error("StabChain: no admissible base point");
      }
      ChainLevel lev;
      lev.base = base;
      lev.transversal.assign(static_cast<size_t>(degree_), std::nullopt);
      lev.orbit = {base};
      lev.transversal[static_cast<size_t>(base)] = Perm::identity(degree_);
      levels_.push_back(std::move(lev));
      if (r(base) != base) {
        l = levels_.size() - 1;
        break;
      }
    }
  }

  // The residue fixes every base point above level l, so it belongs to the
  // generating set of each level in [start_level, l].
  for (size_t j = start_level; j <= l; ++j) {
    levels_[j].gens.push_back(r);
    rebuild_orbit(j);
  }
  return static_cast<int>(l);
}

void StabChain::rebuild_orbit(size_t level) {
  ChainLevel& lev = levels_[level];
  lev.orbit.assign(1, lev.base);
  std::fill(lev.transversal.begin(), lev.transversal.end(), std::nullopt);
  lev.transversal[static_cast<size_t>(lev.base)] = Perm::identity(degree_);
  for (size_t qi = 0; qi < lev.orbit.size(); ++qi) {
    int y = lev.orbit[qi];
    for (const Perm& s : lev.gens) {
      int z = s(y);
      if (!lev.transversal[static_cast<size_t>(z)]) {
        lev.transversal[static_cast<size_t>(z)] =
            compose(*lev.transversal[static_cast<size_t>(y)], s);
        lev.orbit.push_back(z);
      }
    }
  }
}

std::uint64_t StabChain::order() const {
  std::uint64_t n = 1;
  for (const ChainLevel& lev : levels_) n *= lev.orbit.size();
  return n;
}

std::pair<Perm, size_t> StabChain::sift(const Perm& g) const {
  Perm r = g;
  size_t l = 0;
  while (l < levels_.size()) {
    const ChainLevel& lev = levels_[l];
    int x = r(lev.base);
    if (x != lev.base) {
      const auto& u = lev.transversal[static_cast<size_t>(x)];
      if (!u) return {r, l};
      r = compose(r, inverse(*u));
    }
    ++l;
  }
  return {r, l};
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  return sift(g).first.is_identity();
}

std::vector<Perm> StabChain::stabilizer_gens(size_t nfixed) const {
  if (nfixed >= levels_.size()) return {};
  return levels_[nfixed].gens;
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("PermGroup: degree out of range");
  for (const Perm& g : gens_)
    if (g.degree() != degree_)
      throw std::invalid_argument("PermGroup: generator degree mismatch");
}

const StabChain& PermGroup::chain() const {
  if (!chain_) chain_.emplace(degree_, gens_);
  return *chain_;
}

std::uint64_t PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Perm& g) const { return chain().contains(g); }

std::vector<int> PermGroup::orbit_of(int degree, const std::vector<Perm>& gens,
                                     int point) {
  if (point < 0 || point >= degree)
    throw std::invalid_argument("orbit: point out of range");
  std::vector<char> seen(static_cast<size_t>(degree), 0);
  std::vector<int> out{point};
  seen[static_cast<size_t>(point)] = 1;
  for (size_t qi = 0; qi < out.size(); ++qi)
    for (const Perm& s : gens) {
      int z = s(out[qi]);
      if (!seen[static_cast<size_t>(z)]) {
        seen[static_cast<size_t>(z)] = 1;
        out.push_back(z);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> PermGroup::orbit(int point) const {
  return orbit_of(degree_, gens_, point);
}

PermGroup PermGroup::point_stabilizer(int point) const {
  if (point < 0 || point >= degree_)
    throw std::invalid_argument("point_stabilizer: point out of range");
  StabChain ch(degree_, gens_, {point});
  std::vector<Perm> sgens = ch.stabilizer_gens(1);
  std::vector<Perm> uniq;
  for (Perm& g : sgens)
    if (!g.is_identity() && std::find(uniq.begin(), uniq.end(), g) == uniq.end())
      uniq.push_back(std::move(g));
  return PermGroup(degree_, std::move(uniq));
}

bool PermGroup::is_transitive() const {
  return orbit(0).size() == static_cast<size_t>(degree_);
}

bool PermGroup::is_2_transitive() const {
  if (degree_ < 2)
    throw std::invalid_argument("is_2_transitive: degree must be >= 2");
  if (!is_transitive()) return false;
  StabChain ch(degree_, gens_, {0});
  std::vector<Perm> sgens = ch.stabilizer_gens(1);
  return orbit_of(degree_, sgens, 1).size() == static_cast<size_t>(degree_ - 1);
}

bool PermGroup::is_block_system(
    const std::vector<std::vector<int>>& partition) const {
  std::vector<int> cell_of(static_cast<size_t>(degree_), -1);
  for (size_t c = 0; c < partition.size(); ++c) {
    if (partition[c].empty())
      throw std::invalid_argument("is_block_system: empty cell");
    for (int x : partition[c]) {
      if (x < 0 || x >= degree_ || cell_of[static_cast<size_t>(x)] != -1)
        throw std::invalid_argument("is_block_system: malformed partition");
      cell_of[static_cast<size_t>(x)] = static_cast<int>(c);
    }
  }
  for (int x = 0; x < degree_; ++x)
    if (cell_of[static_cast<size_t>(x)] == -1)
      throw std::invalid_argument(
          "is_block_system: partition does not cover domain");

  for (const Perm& g : gens_)
    for (const auto& cell : partition) {
      int target = cell_of[static_cast<size_t>(g(cell[0]))];
      if (partition[static_cast<size_t>(target)].size() != cell.size())
        return false;
      for (int x : cell)
        if (cell_of[static_cast<size_t>(g(x))] != target) return false;
    }
  return true;
}

std::vector<Perm> enumerate_elements(int degree, const std::vector<Perm>& gens,
                                     size_t limit) {
  std::set<Perm> seen{Perm::identity(degree)};
  std::vector<Perm> queue{Perm::identity(degree)};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Perm cur = queue[qi];
    for (const Perm& s : gens) {
      Perm next = compose(cur, s);
      if (seen.insert(next).second) {
        if (seen.size() > limit)
          throw std::length_error("enumerate_elements: group exceeds limit");
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// Homomorphism

namespace {

Perm pair_up(const Perm& d, const Perm& i, int dd, int id) {
  std::vector<int> img(static_cast<size_t>(dd + id));
  for (int x = 0; x < dd; ++x) img[static_cast<size_t>(x)] = d(x);
  for (int x = 0; x < id; ++x) img[static_cast<size_t>(dd + x)] = dd + i(x);
  return Perm(std::move(img));
}

Perm domain_part(const Perm& c, int dd) {
  std::vector<int> img(c.images().begin(), c.images().begin() + dd);
  return Perm(std::move(img));
}

Perm image_part(const Perm& c, int dd, int id) {
  std::vector<int> img(static_cast<size_t>(id));
  for (int x = 0; x < id; ++x) img[static_cast<size_t>(x)] = c(dd + x) - dd;
  return Perm(std::move(img));
}

}  // namespace

Homomorphism::Homomorphism(int domain_degree, const std::vector<Perm>& domain_gens,
                           int image_degree, const std::vector<Perm>& image_gens)
    : dom_deg_(domain_degree), img_deg_(image_degree), image_gens_(image_gens) {
  if (domain_gens.size() != image_gens.size())
    throw std::invalid_argument("hom_by_images: generator count mismatch");
  std::vector<Perm> paired;
  paired.reserve(domain_gens.size());
  for (size_t i = 0; i < domain_gens.size(); ++i) {
    if (domain_gens[i].degree() != domain_degree ||
        image_gens[i].degree() != image_degree)
      throw std::invalid_argument("hom_by_images: generator degree mismatch");
    paired.push_back(pair_up(domain_gens[i], image_gens[i], dom_deg_, img_deg_));
  }
  // Base points restricted to the domain part: the chain completes with such a
  // base iff no nontrivial element of the paired group acts trivially on the
  // domain, i.e. iff the generator images extend to a homomorphism.
  try {
    paired_.emplace(dom_deg_ + img_deg_, paired, std::vector<int>{}, dom_deg_);
  } catch (const std::domain_error&) {
    throw std::invalid_argument(
        "hom_by_images: images do not extend to a homomorphism");
  }
}

Perm Homomorphism::operator()(const Perm& g) const {
  if (g.degree() != dom_deg_)
    throw std::invalid_argument("Homomorphism: element degree mismatch");
  // Sift the domain element, collecting the paired transversal elements used;
  // the image is the product of their image parts in reverse order.
  Perm r = g;
  std::vector<const Perm*> used;
  for (size_t l = 0; l < paired_->size(); ++l) {
    const ChainLevel& lev = paired_->level(l);
    int x = r(lev.base);
    if (x == lev.base) continue;
    const auto& u = lev.transversal[static_cast<size_t>(x)];
    if (!u)
      throw std::invalid_argument("Homomorphism: element not in domain group");
    r = compose(r, domain_part(inverse(*u), dom_deg_));
    used.push_back(&*u);
  }
  if (!r.is_identity())
    throw std::invalid_argument("Homomorphism: element not in domain group");
  Perm img = Perm::identity(img_deg_);
  for (auto it = used.rbegin(); it != used.rend(); ++it)
    img = compose(img, image_part(**it, dom_deg_, img_deg_));
  return img;
}

std::uint64_t Homomorphism::domain_order() const { return paired_->order(); }

std::uint64_t Homomorphism::image_order() const {
  StabChain ch(img_deg_, image_gens_);
  return ch.order();
}

}  // namespace twg
