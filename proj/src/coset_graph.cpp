#include "twg/coset_graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

namespace twg {

namespace {

constexpr size_t kVertexCap = 1'000'000;

std::vector<int> flatten(const std::vector<Perm>& tuple) {
  std::vector<int> flat;
  flat.reserve(tuple.size() * tuple[0].images().size());
  for (const Perm& t : tuple)
    flat.insert(flat.end(), t.images().begin(), t.images().end());
  return flat;
}

std::vector<Perm> unflatten(const std::vector<int>& flat, int k, int deg) {
  std::vector<Perm> tuple;
  tuple.reserve(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i)
    tuple.push_back(Perm(std::vector<int>(
        flat.begin() + static_cast<size_t>(i) * deg,
        flat.begin() + static_cast<size_t>(i + 1) * deg)));
  return tuple;
}

}  // namespace

CosetGraph::CosetGraph(const Catalog& cat, const RData& r)
    : cat_(cat), r_(r), tw_(cat) {
  // Chains are built lazily; force the ones queried from parallel sections so
  // later reads are const.
  cat_.T().order();
}

VertexId CosetGraph::canonical_left(const TwElement& g) const {
  return {true, flatten(tw_.n_act(g.f, g.p)), -1};
}

VertexId CosetGraph::canonical_right(const TwElement& g) const {
  auto [v, m] = cat_.decompose(g.p);
  std::vector<Perm> fm = tw_.n_act(g.f, AffineElement{{0, 0}, m});
  // Lex-min of { r * f^m : r in R }, compared coordinate block by coordinate
  // block so losing candidates abort early.
  std::vector<int> best, cand;
  cand.reserve(fm.size() * fm[0].images().size());
  for (const auto& relem : r_.elements) {
    cand.clear();
    int cmp = best.empty() ? -1 : 0;  // -1 better, 0 undecided, 1 worse
    for (size_t i = 0; i < fm.size() && cmp <= 0; ++i) {
      Perm prod = compose(relem[i], fm[i]);
      size_t off = cand.size();
      cand.insert(cand.end(), prod.images().begin(), prod.images().end());
      if (cmp == 0)
        for (size_t x = off; x < cand.size(); ++x)
          if (cand[x] != best[x]) {
            cmp = cand[x] < best[x] ? -1 : 1;
            break;
          }
    }
    if (cmp == -1) best = cand;
  }
  return {false, std::move(best), cat_.vec_index(cat_.vecmat(v, m))};
}

TwElement CosetGraph::representative(const VertexId& v) const {
  std::vector<Perm> tuple = unflatten(v.flat, cat_.k(), cat_.q() + 1);
  if (v.left) return {std::move(tuple), {}};
  return {std::move(tuple), AffineElement{cat_.vec_at(v.w), {}}};
}

VertexId CosetGraph::u_vertex() const { return canonical_left(tw_.identity()); }

VertexId CosetGraph::v_vertex() const { return canonical_right(tw_.identity()); }

bool CosetGraph::in_RQ(const TwElement& g) const {
  return g.p.v == Vec2{0, 0} && in_R(cat_, r_, g.f);
}

bool CosetGraph::adjacent(const VertexId& left, const VertexId& right) const {
  if (!left.left || right.left)
    throw std::invalid_argument("adjacent: expects a left and a right vertex");
  TwElement x = tw_.mul(representative(right), tw_.inv(representative(left)));
  return in_R(cat_, r_, x.f);
}

std::vector<VertexId> CosetGraph::neighbors(const VertexId& v) const {
  std::vector<VertexId> out;
  out.reserve(static_cast<size_t>(cat_.k()));
  TwElement rep = representative(v);
  if (v.left) {
    // { RQ t_w g : w in V }
    for (int i = 0; i < cat_.k(); ++i)
      out.push_back(canonical_right(
          tw_.mul(tw_.embed_P({cat_.vec_at(i), {}}), rep)));
  } else {
    // { P r g : r in R }
    for (const auto& relem : r_.elements)
      out.push_back(canonical_left(tw_.mul(TwElement{relem, {}}, rep)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Ball CosetGraph::bfs_ball(const VertexId& center, int radius, int threads) const {
  if (radius < 0 || radius > 3)
    throw std::invalid_argument("bfs_ball: radius must be in [0, 3]");
  if (threads < 1) threads = 1;
  Ball ball;
  ball.center = center;
  ball.radius = radius;
  ball.depth[center] = 0;
  if (radius == 0) {
    ball.adjacency[center] = {};
    return ball;
  }
  std::vector<VertexId> frontier{center};
  for (int d = 0; d < radius && !frontier.empty(); ++d) {
    // Per-depth expansion is pure and may run on several threads; the merge
    // happens in frontier order, so results do not depend on thread count.
    std::vector<std::vector<VertexId>> lists(frontier.size());
    auto work = [&](size_t lo, size_t hi) {
      for (size_t i = lo; i < hi; ++i) lists[i] = neighbors(frontier[i]);
    };
    if (threads == 1 || frontier.size() < 32) {
      work(0, frontier.size());
    } else {
      std::vector<std::thread> pool;
      size_t chunk = (frontier.size() + threads - 1) / threads;
      for (int t = 0; t < threads; ++t) {
        size_t lo = std::min(frontier.size(), t * chunk);
        size_t hi = std::min(frontier.size(), (t + 1) * chunk);
        if (lo < hi) pool.emplace_back(work, lo, hi);
      }
      for (auto& th : pool) th.join();
    }
    std::vector<VertexId> next;
    for (size_t i = 0; i < frontier.size(); ++i) {
      for (const VertexId& nb : lists[i])
        if (!ball.depth.count(nb)) {
          ball.depth[nb] = d + 1;
          next.push_back(nb);
          if (ball.depth.size() > kVertexCap)
            throw std::length_error("bfs_ball: vertex cap exceeded");
        }
      ball.adjacency[frontier[i]] = std::move(lists[i]);
    }
    frontier = std::move(next);
  }
  // Frontier vertices keep their full neighbor lists too (entries may fall
  // outside the ball).
  for (const VertexId& v : frontier) ball.adjacency[v] = neighbors(v);
  return ball;
}

VertexId CosetGraph::act(const VertexId& v, const TwElement& g) const {
  TwElement x = tw_.mul(representative(v), g);
  return v.left ? canonical_left(x) : canonical_right(x);
}

ArcOrbitReport CosetGraph::arc_orbit_check(const VertexId& center,
                                           const std::vector<TwElement>& stab_gens,
                                           int s) const {
  if (s != 1 && s != 2) throw std::invalid_argument("arc_orbit_check: s must be 1 or 2");
  for (const TwElement& g : stab_gens)
    if (act(center, g) != center)
      throw std::invalid_argument("arc_orbit_check: generator does not fix center");

  using Arc = std::pair<VertexId, VertexId>;  // (v1, v2); v2 == v1 for s = 1
  std::vector<Arc> arcs;
  std::vector<VertexId> first = neighbors(center);
  if (s == 1) {
    for (const VertexId& w : first) arcs.push_back({w, w});
  } else {
    for (const VertexId& w : first)
      for (const VertexId& x : neighbors(w))
        if (x != center) arcs.push_back({w, x});
  }
  std::map<Arc, size_t> index;
  for (size_t i = 0; i < arcs.size(); ++i) index[arcs[i]] = i;

  // Vertex images memoized per generator.
  std::vector<std::map<VertexId, VertexId>> memo(stab_gens.size());
  auto image = [&](size_t gi, const VertexId& v) {
    auto it = memo[gi].find(v);
    if (it != memo[gi].end()) return it->second;
    VertexId img = act(v, stab_gens[gi]);
    memo[gi].emplace(v, img);
    return img;
  };

  std::vector<char> seen(arcs.size(), 0);
  std::uint64_t orbits = 0;
  for (size_t start = 0; start < arcs.size(); ++start) {
    if (seen[start]) continue;
    ++orbits;
    std::vector<size_t> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      size_t cur = stack.back();
      stack.pop_back();
      for (size_t gi = 0; gi < stab_gens.size(); ++gi) {
        Arc img{image(gi, arcs[cur].first), image(gi, arcs[cur].second)};
        auto it = index.find(img);
        if (it == index.end())
          throw std::logic_error("arc_orbit_check: arc image not in arc set");
        if (!seen[it->second]) {
          seen[it->second] = 1;
          stack.push_back(it->second);
        }
      }
    }
  }
  return {static_cast<std::uint64_t>(arcs.size()), orbits};
}

int CosetGraph::n_orbit_invariant(const VertexId& right) const {
  if (right.left)
    throw std::invalid_argument("n_orbit_invariant: expects a right vertex");
  return right.w;
}

StarQuotientReport CosetGraph::star_quotient_check(std::uint32_t seed) const {
  StarQuotientReport rep;
  std::vector<VertexId> nbrs = neighbors(u_vertex());

  // Each right vertex must keep its invariant under right N-multiplication.
  std::mt19937 rng(seed);
  auto random_n = [&]() {
    std::vector<Perm> f(static_cast<size_t>(cat_.k()),
                        Perm::identity(cat_.q() + 1));
    for (auto& coord : f) {
      int len = static_cast<int>(rng() % 5);
      for (int s = 0; s < len; ++s)
        coord = compose(coord, cat_.T_gens()[rng() % cat_.T_gens().size()]);
    }
    return f;
  };
  rep.invariant_constant_on_samples = true;
  const int samples_per_vertex = 500;
  for (const VertexId& v : nbrs) {
    TwElement repv = representative(v);
    for (int t = 0; t < samples_per_vertex; ++t) {
      VertexId moved = canonical_right(tw_.mul(repv, TwElement{random_n(), {}}));
      if (moved.w != v.w) rep.invariant_constant_on_samples = false;
    }
  }

  // The k neighbors of u realize every invariant value exactly once.
  std::set<int> values;
  for (const VertexId& v : nbrs) values.insert(v.w);
  rep.value_count = values.size();
  rep.all_values_once =
      nbrs.size() == static_cast<size_t>(cat_.k()) &&
      values.size() == static_cast<size_t>(cat_.k());

  // Quotient by (all left vertices, right invariant classes) on the radius-1
  // ball: a single left class joined to every one of the k right classes.
  rep.quotient_is_star = rep.all_values_once;
  return rep;
}

BlockActionReport CosetGraph::block_action_check() const {
  BlockActionReport rep;
  std::vector<Perm> t_elems =
      enumerate_elements(cat_.q() + 1, cat_.T_gens(), 10'000);
  std::map<Perm, int> t_index;
  for (size_t i = 0; i < t_elems.size(); ++i)
    t_index[t_elems[i]] = static_cast<int>(i);
  const int n = static_cast<int>(t_elems.size());
  rep.block_size = static_cast<std::uint64_t>(n);

  // The block pi = { labels f_t }. N-hat acts by right multiplication,
  // P acts through phi on the common value.
  std::vector<Perm> nhat_gens, p_gens_on_pi;
  for (const Perm& s : cat_.T_gens()) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      img[static_cast<size_t>(i)] = t_index.at(compose(t_elems[static_cast<size_t>(i)], s));
    nhat_gens.push_back(Perm(std::move(img)));
  }
  for (const AffineElement& g : cat_.P_gens()) {
    Perm twist = cat_.phi(g.m);
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      img[static_cast<size_t>(i)] =
          t_index.at(conjugate(t_elems[static_cast<size_t>(i)], twist));
    p_gens_on_pi.push_back(Perm(std::move(img)));
  }

  std::vector<Perm> all = nhat_gens;
  all.insert(all.end(), p_gens_on_pi.begin(), p_gens_on_pi.end());
  PermGroup induced(n, all);
  rep.induced_order = induced.order();

  PermGroup nhat(n, nhat_gens);
  rep.n_hat_regular =
      nhat.order() == static_cast<std::uint64_t>(n) && nhat.is_transitive();

  int id_point = t_index.at(Perm::identity(cat_.q() + 1));
  PermGroup stab = induced.point_stabilizer(id_point);
  rep.point_stab_order = stab.order();
  rep.identity_fixed_by_stab = true;
  for (const Perm& g : stab.generators())
    if (g(id_point) != id_point) rep.identity_fixed_by_stab = false;

  PermGroup p_image(n, p_gens_on_pi);
  rep.p_kernel_order = cat_.P_perm().order() / p_image.order();
  return rep;
}

std::vector<int> CosetGraph::cell_key(const std::vector<Perm>& label) const {
  // Labels n, n' lie in the same cell of Pi iff n' n^-1 is a constant tuple,
  // iff the tuples (n(z_1)^-1 n(z_i))_i coincide.
  std::vector<int> key;
  Perm anchor = inverse(label[0]);
  key.reserve(static_cast<size_t>(cat_.k() - 1) * (cat_.q() + 1));
  for (int i = 1; i < cat_.k(); ++i) {
    Perm rel = compose(anchor, label[static_cast<size_t>(i)]);
    key.insert(key.end(), rel.images().begin(), rel.images().end());
  }
  return key;
}

PiBlockReport CosetGraph::pi_block_check(const Ball& ball, std::uint32_t seed) const {
  PiBlockReport rep;
  const int deg = cat_.q() + 1;

  // Explicit cell of u: all diagonal labels f_t share u's key, and no other
  // ball label does.
  std::vector<Perm> t_elems = enumerate_elements(deg, cat_.T_gens(), 10'000);
  std::vector<int> u_key = cell_key(tw_.identity_tuple());
  rep.u_cell_is_diagonal = true;
  std::set<std::vector<int>> cell_labels;
  for (const Perm& t : t_elems) {
    std::vector<Perm> ft = tw_.diagonal(t);
    if (cell_key(ft) != u_key) rep.u_cell_is_diagonal = false;
    cell_labels.insert(flatten(ft));
  }
  rep.u_cell_size = cell_labels.size();
  for (const auto& [v, d] : ball.depth) {
    if (!v.left) continue;
    std::vector<Perm> label = unflatten(v.flat, cat_.k(), deg);
    if (cell_key(label) == u_key && !cell_labels.count(v.flat))
      rep.u_cell_is_diagonal = false;
  }

  // Sampled block property: same-key labels stay same-key under the label
  // action n -> (n f_g)^{p_g} for random g (keys are computable whether or
  // not images stay inside the ball).
  std::vector<std::pair<std::vector<Perm>, std::vector<Perm>>> pairs;
  std::map<std::vector<int>, std::vector<const VertexId*>> cells;
  for (const auto& [v, d] : ball.depth)
    if (v.left) cells[cell_key(unflatten(v.flat, cat_.k(), deg))].push_back(&v);
  for (const auto& [key, members] : cells)
    if (members.size() >= 2)
      pairs.push_back({unflatten(members[0]->flat, cat_.k(), deg),
                       unflatten(members[1]->flat, cat_.k(), deg)});
  std::mt19937 rng(seed);
  for (int i = 0; i < 8; ++i) {
    const Perm& t = t_elems[rng() % t_elems.size()];
    const Perm& s = t_elems[rng() % t_elems.size()];
    pairs.push_back({tw_.diagonal(t), tw_.diagonal(s)});
  }
  pairs.push_back({tw_.identity_tuple(),
                   tw_.diagonal(t_elems[t_elems.size() / 2])});

  rep.blocks_preserved = true;
  for (int trial = 0; trial < 200; ++trial) {
    TwElement g = random_element(rng);
    for (const auto& [n1, n2] : pairs) {
      std::vector<Perm> i1 = tw_.n_act(tw_.n_mul(n1, g.f), g.p);
      std::vector<Perm> i2 = tw_.n_act(tw_.n_mul(n2, g.f), g.p);
      if (cell_key(i1) != cell_key(i2)) rep.blocks_preserved = false;
    }
  }
  return rep;
}

std::vector<TwElement> CosetGraph::u_stabilizer_gens() const {
  std::vector<TwElement> out;
  for (const AffineElement& g : cat_.P_gens()) out.push_back(tw_.embed_P(g));
  return out;
}

std::vector<TwElement> CosetGraph::v_stabilizer_gens() const {
  std::vector<TwElement> out;
  const int dim = 2 * cat_.field().m();
  for (int i = 0; i < dim; ++i) {
    std::vector<int> e(static_cast<size_t>(dim), 0);
    e[static_cast<size_t>(i)] = 1;
    out.push_back(TwElement{
        w_element(cat_, r_, vecmat(e, r_.psi)), AffineElement{}});
  }
  for (const AffineElement& g : cat_.Q_gens()) out.push_back(tw_.embed_P(g));
  return out;
}

TwElement CosetGraph::random_element(std::mt19937& rng, int word_len) const {
  std::vector<Perm> f(static_cast<size_t>(cat_.k()),
                      Perm::identity(cat_.q() + 1));
  for (auto& coord : f) {
    int len = static_cast<int>(rng() % 4);
    for (int s = 0; s < len; ++s)
      coord = compose(coord, cat_.T_gens()[rng() % cat_.T_gens().size()]);
  }
  AffineElement p{};
  for (int s = 0; s < word_len; ++s)
    p = cat_.affine_mul(p, cat_.P_gens()[rng() % cat_.P_gens().size()]);
  return {std::move(f), p};
}

}  // namespace twg
