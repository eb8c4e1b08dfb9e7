#include "hftwo/differential.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hftwo {

namespace {

// Traversal order of the crossings on a selected lift, with the edge copies
// between consecutive crossings. Lifts traverse their edges in the +x/+y
// direction, so "forward" along a route is the positive direction.
struct Route {
  std::vector<int> crossings;
  std::vector<std::vector<int>> segments;  // segments[k]: k -> k+1 (cyclic)
  std::vector<int> pos_of_crossing;        // crossing id -> position or -1
  std::vector<int> all_edges;
};

Route build_route(const AdaptedDiagram& d, int lift_id) {
  Route r;
  const auto& lift = d.lifts[lift_id];
  r.all_edges = lift.edges;
  std::vector<std::pair<int, int>> marks;  // (edge index in lift, crossing)
  for (size_t k = 0; k < lift.edges.size(); ++k) {
    int tail = d.surf.edge_tail(lift.edges[k]);
    int c = d.crossing_at_vertex[tail];
    if (c >= 0 &&
        (d.crossings[c].alpha == lift.sel_index ||
         d.crossings[c].beta == lift.sel_index))
      marks.emplace_back(static_cast<int>(k), c);
  }
  r.pos_of_crossing.assign(d.num_crossings(), -1);
  for (size_t m = 0; m < marks.size(); ++m) {
    r.crossings.push_back(marks[m].second);
    r.pos_of_crossing[marks[m].second] = static_cast<int>(m);
    std::vector<int> seg;
    int from = marks[m].first;
    int to = marks[(m + 1) % marks.size()].first;
    int len = static_cast<int>(lift.edges.size());
    for (int k = from; k != to; k = (k + 1) % len) seg.push_back(lift.edges[k]);
    if (marks.size() == 1)
      for (int k = 0; k < len; ++k) seg.push_back(lift.edges[k]);
    r.segments.push_back(std::move(seg));
  }
  return r;
}

// Directions: 0=+x, 1=+y, 2=-x, 3=-y; left turn is +1 mod 4. The interior
// quadrant at a corner entered along dir sits between dir and its left, and
// the quadrant array is indexed NE,NW,SW,SE in the same rotation.
int left_of(int dir) { return (dir + 1) % 4; }

struct TermCollector {
  const AdaptedDiagram& d;
  std::set<std::string> seen;
  std::vector<DifferentialTerm> terms;

  void add(const Generator& y, const DomainVector& dv, DomainShape shape) {
    std::ostringstream key;
    key << generator_key(y) << "|";
    for (long long v : dv) key << v << ",";
    if (!seen.insert(key.str()).second) return;
    DifferentialTerm t;
    t.y = y;
    t.domain = dv;
    t.upower = static_cast<int>(nw_of(d, dv));
    t.shape = shape;
    terms.push_back(std::move(t));
  }
};

bool in_list(const Generator& x, int c) {
  return std::find(x.point_on_alpha.begin(), x.point_on_alpha.end(), c) !=
         x.point_on_alpha.end();
}

}  // namespace

struct DifferentialEngine::Impl {
  const AdaptedDiagram& d;
  std::vector<Route> alpha_routes, beta_routes;
  std::vector<std::vector<std::pair<int, int>>> domain_neighbors;  // (edge,dom)
  // domains adjacent to each full curve, per family and selected index
  std::vector<std::vector<int>> alpha_adj, beta_adj;

  explicit Impl(const AdaptedDiagram& dg) : d(dg) {
    for (int a : d.alpha) alpha_routes.push_back(build_route(d, a));
    for (int b : d.beta) beta_routes.push_back(build_route(d, b));
    domain_neighbors.assign(d.domains.size(), {});
    for (size_t i = 0; i < d.domains.size(); ++i)
      for (int f : d.domains[i].faces)
        for (auto [e, rev] : d.surf.faces[f].boundary) {
          (void)rev;
          int da = d.domain_of_face[d.surf.edge_faces[e][0]];
          int db = d.domain_of_face[d.surf.edge_faces[e][1]];
          int other = da == static_cast<int>(i) ? db : da;
          domain_neighbors[i].emplace_back(e, other);
        }
    auto adj_of = [&](const Route& r) {
      std::set<int> doms;
      for (int e : r.all_edges) {
        doms.insert(d.domain_of_face[d.surf.edge_faces[e][0]]);
        doms.insert(d.domain_of_face[d.surf.edge_faces[e][1]]);
      }
      return std::vector<int>(doms.begin(), doms.end());
    };
    for (const auto& r : alpha_routes) alpha_adj.push_back(adj_of(r));
    for (const auto& r : beta_routes) beta_adj.push_back(adj_of(r));
  }

  const Route& route_for(int crossing, int dir) const {
    const Crossing& c = d.crossings[crossing];
    return dir % 2 == 0 ? alpha_routes[c.alpha] : beta_routes[c.beta];
  }

  std::pair<int, const std::vector<int>*> step(int crossing, int dir) const {
    const Route& r = route_for(crossing, dir);
    int pos = r.pos_of_crossing[crossing];
    int m = static_cast<int>(r.crossings.size());
    if (dir < 2) {
      int nxt = (pos + 1) % m;
      return {r.crossings[nxt], &r.segments[pos]};
    }
    int prv = (pos - 1 + m) % m;
    return {r.crossings[prv], &r.segments[prv]};
  }

  // Per-call scratch.
  struct Scratch {
    std::vector<char> in_x;
    std::vector<char> blocked;   // per edge copy
    std::vector<int> arc_stack;  // blocked edges, for unwinding
    std::vector<char> in_region;
    std::vector<int> region_stack;
    std::vector<int> queue;
  };

  void block(Scratch& s, const std::vector<int>& edges) const {
    for (int e : edges)
      if (!s.blocked[e]) {
        s.blocked[e] = 1;
        s.arc_stack.push_back(e);
      }
  }
  void unblock_to(Scratch& s, size_t mark) const {
    while (s.arc_stack.size() > mark) {
      s.blocked[s.arc_stack.back()] = 0;
      s.arc_stack.pop_back();
    }
  }

  // Flood over merged domains avoiding blocked edges; fills in_region and
  // region_stack (cleared by the caller via the stack). Aborts once the
  // region swallows more than nw_cap basepoint domains (returns the count
  // seen so far, which is then > nw_cap).
  long long flood(Scratch& s, int start, long long nw_cap) const {
    s.queue.clear();
    s.in_region[start] = 1;
    s.region_stack.push_back(start);
    s.queue.push_back(start);
    long long nw = d.domains[start].basepoint >= 0 ? 1 : 0;
    if (nw > nw_cap) return nw;
    for (size_t qi = 0; qi < s.queue.size(); ++qi) {
      int dom = s.queue[qi];
      for (auto [e, other] : domain_neighbors[dom]) {
        if (s.blocked[e] || s.in_region[other]) continue;
        s.in_region[other] = 1;
        s.region_stack.push_back(other);
        s.queue.push_back(other);
        if (d.domains[other].basepoint >= 0 && ++nw > nw_cap) return nw;
      }
    }
    return nw;
  }
  void clear_region(Scratch& s) const {
    for (int dom : s.region_stack) s.in_region[dom] = 0;
    s.region_stack.clear();
  }

  std::optional<Generator> corner_generator(const Generator& x,
                                            const std::vector<int>& xs,
                                            const std::vector<int>& ys) const {
    Generator y = x;
    std::vector<char> moved_alpha(d.alpha.size(), 0);
    for (int c : xs) moved_alpha[d.crossings[c].alpha] = 1;
    std::vector<char> used_beta(d.beta.size(), 0);
    std::vector<char> seen_alpha(d.alpha.size(), 0);
    for (int c : ys) {
      int a = d.crossings[c].alpha;
      if (!moved_alpha[a] || seen_alpha[a]) return std::nullopt;
      seen_alpha[a] = 1;
      y.point_on_alpha[a] = c;
    }
    for (int c : xs)
      if (!seen_alpha[d.crossings[c].alpha]) return std::nullopt;
    for (int c : y.point_on_alpha) {
      if (used_beta[d.crossings[c].beta]) return std::nullopt;
      used_beta[d.crossings[c].beta] = 1;
    }
    return y;
  }

  std::array<long long, 4> quads(const Scratch& s, int crossing) const {
    std::array<long long, 4> q;
    for (int k = 0; k < 4; ++k)
      q[k] = s.in_region[d.crossings[crossing].quad[k]] ? 1 : 0;
    return q;
  }

  // Corner multiplicities: walk corners 1/4, other x-coordinates zero
  // except an optional shared half-coordinate on the inner circle.
  bool corner_profile_ok(const Scratch& s, const Generator& x,
                         const std::vector<int>& xs,
                         const std::vector<int>& ys, int shared) const {
    auto is_corner = [&](int c) {
      return std::find(xs.begin(), xs.end(), c) != xs.end();
    };
    for (int c : x.point_on_alpha) {
      auto q = quads(s, c);
      long long m4 = q[0] + q[1] + q[2] + q[3];
      if (c == shared) {
        bool adjacent = (q[0] && q[1]) || (q[1] && q[2]) || (q[2] && q[3]) ||
                        (q[3] && q[0]);
        if (m4 != 2 || !adjacent) return false;
      } else if (is_corner(c)) {
        if (m4 != 1) return false;
      } else if (m4 != 0) {
        return false;
      }
    }
    for (int c : ys) {
      auto q = quads(s, c);
      if (q[0] + q[1] + q[2] + q[3] != 1) return false;
    }
    return true;
  }

  DomainVector region_vector(const Scratch& s) const {
    DomainVector dv(d.domains.size(), 0);
    for (int dom : s.region_stack) dv[dom] = 1;
    return dv;
  }

  // Closed boundary walks with `corners` corners alternating x/y points,
  // all left turns. Emits validated domains into `out`.
  // A quarter corner needs its interior quadrant in a domain the other
  // three quadrants avoid; the interior quadrant of a corner left along
  // `outdir` is quad[outdir].
  bool corner_possible(int crossing, int outdir) const {
    const auto& quad = d.crossings[crossing].quad;
    int dom = quad[outdir];
    for (int k = 0; k < 4; ++k)
      if (k != outdir && quad[k] == dom) return false;
    return true;
  }

  void walks(Scratch& s, const Generator& x, int corners,
             TermCollector& out) const {
    std::vector<int> xs, ys;
    for (int c1 : x.point_on_alpha)
      for (int dir0 = 0; dir0 < 4; ++dir0) {
        if (!corner_possible(c1, dir0)) continue;
        xs.assign(1, c1);
        ys.clear();
        extend(s, x, corners, xs, ys, c1, dir0, dir0, 1, out);
      }
  }

  void extend(Scratch& s, const Generator& x, int corners,
              std::vector<int>& xs, std::vector<int>& ys, int cur, int dir,
              int quad0, int leg, TermCollector& out) const {
    int c1 = xs[0];
    bool last = leg == corners;
    bool to_y = leg % 2 == 1;
    size_t mark = s.arc_stack.size();
    if (to_y && !last) {
      int q = cur;
      while (true) {
        auto [nxt, seg] = step(q, dir);
        block(s, *seg);
        q = nxt;
        if (q == c1 || s.in_x[q]) break;
        if (leg == corners - 1) {
          bool closes = (left_of(dir) % 2 == 0)
                            ? d.crossings[q].alpha == d.crossings[c1].alpha
                            : d.crossings[q].beta == d.crossings[c1].beta;
          if (!closes) continue;
        }
        if (!corner_possible(q, left_of(dir))) continue;
        ys.push_back(q);
        extend(s, x, corners, xs, ys, q, left_of(dir), quad0, leg + 1, out);
        ys.pop_back();
      }
      unblock_to(s, mark);
      return;
    }
    // Forced leg: run to the first x-coordinate.
    int q = cur;
    while (true) {
      auto [nxt, seg] = step(q, dir);
      block(s, *seg);
      q = nxt;
      if (s.in_x[q]) break;
    }
    if (last) {
      if (q == c1) emit(s, x, xs, ys, quad0, out);
      unblock_to(s, mark);
      return;
    }
    bool fresh = std::find(xs.begin(), xs.end(), q) == xs.end() && q > c1 &&
                 corner_possible(q, left_of(dir));
    if (fresh) {
      xs.push_back(q);
      extend(s, x, corners, xs, ys, q, left_of(dir), quad0, leg + 1, out);
      xs.pop_back();
    }
    unblock_to(s, mark);
  }

  void emit(Scratch& s, const Generator& x, const std::vector<int>& xs,
            const std::vector<int>& ys, int quad0, TermCollector& out) const {
    auto y = corner_generator(x, xs, ys);
    if (!y) return;
    int start = d.crossings[xs[0]].quad[quad0];
    bool octagon = xs.size() == 4;
    // Direct flood: a rectangle (4 corners, no basepoint) or an octagon
    // (8 corners, one basepoint). Aborts early past two basepoints.
    long long nw = flood(s, start, 2);
    bool mask_complete = nw <= 2;
    if ((octagon ? nw == 1 : nw == 0) &&
        corner_profile_ok(s, x, xs, ys, -1)) {
      DomainVector dv = region_vector(s);
      if (boundary_consistent(d, dv, x, *y)) {
        auto st = domain_stats(d, dv, x, *y);
        if (st.mu4 == 4) {
          if (st.chiS4 != 4 || st.branch4 != 0)
            throw std::runtime_error(
                "classified disk domain fails its index profile");
          out.add(*y, dv, octagon ? DomainShape::Octagon
                                  : DomainShape::Rectangle);
        }
      }
    }
    if (octagon || nw == 0) {
      clear_region(s);
      return;
    }
    // Candidate inner circles must lie inside the directly flooded region:
    // the annulus flood is contained in it.
    std::vector<char> direct(s.in_region.begin(), s.in_region.end());
    clear_region(s);
    // Annulus: add an inner boundary circle through a shared coordinate.
    for (int x3 : x.point_on_alpha) {
      if (x3 == xs[0] || x3 == xs[1]) continue;
      for (int family = 0; family < 2; ++family) {
        const Route& r = family == 0 ? alpha_routes[d.crossings[x3].alpha]
                                     : beta_routes[d.crossings[x3].beta];
        const auto& adj = family == 0 ? alpha_adj[d.crossings[x3].alpha]
                                      : beta_adj[d.crossings[x3].beta];
        if (mask_complete) {
          bool inside = true;
          for (int dom : adj)
            if (!direct[dom]) inside = false;
          if (!inside) continue;
        }
        bool disjoint = true;
        for (int e : r.all_edges)
          if (s.blocked[e]) disjoint = false;
        if (!disjoint) continue;
        size_t mark = s.arc_stack.size();
        block(s, r.all_edges);
        long long nw1 = flood(s, start, 1);
        bool on_boundary = true;
        for (int e : r.all_edges) {
          long long a = s.in_region[d.domain_of_face[d.surf.edge_faces[e][0]]];
          long long b = s.in_region[d.domain_of_face[d.surf.edge_faces[e][1]]];
          if (a + b != 1) on_boundary = false;
        }
        if (nw1 == 1 && on_boundary &&
            corner_profile_ok(s, x, xs, ys, x3)) {
          DomainVector dv = region_vector(s);
          if (boundary_consistent(d, dv, x, *y)) {
            auto st = domain_stats(d, dv, x, *y);
            if (st.mu4 == 4) {
              if (st.chiS4 != 0)
                throw std::runtime_error("annulus fails its index profile");
              out.add(*y, dv, DomainShape::Annulus);
            }
          }
        }
        clear_region(s);
        unblock_to(s, mark);
      }
    }
  }
};

DifferentialEngine::DifferentialEngine(const AdaptedDiagram& d)
    : impl_(std::make_unique<Impl>(d)) {}
DifferentialEngine::~DifferentialEngine() = default;

std::vector<DifferentialTerm> DifferentialEngine::enumerate(
    const Generator& x) const {
  const AdaptedDiagram& d = impl_->d;
  Impl::Scratch s;
  s.in_x.assign(d.num_crossings(), 0);
  for (int c : x.point_on_alpha) s.in_x[c] = 1;
  s.blocked.assign(d.surf.edge_count(), 0);
  s.in_region.assign(d.domains.size(), 0);
  TermCollector out{d, {}, {}};
  impl_->walks(s, x, 4, out);
  impl_->walks(s, x, 8, out);
  std::sort(out.terms.begin(), out.terms.end(),
            [](const DifferentialTerm& a, const DifferentialTerm& b) {
              if (a.y.point_on_alpha != b.y.point_on_alpha)
                return a.y.point_on_alpha < b.y.point_on_alpha;
              return a.domain < b.domain;
            });
  return out.terms;
}

std::vector<DifferentialTerm> enumerate_differential_domains(
    const AdaptedDiagram& d, const Generator& x) {
  DifferentialEngine eng(d);
  return eng.enumerate(x);
}
namespace {

struct OracleSearch {
  const AdaptedDiagram& d;
  const Generator& x;
  int max_coeff, mu_target, nw_max;
  unsigned long long budget;
  OracleResult result;

  std::vector<char> in_x;
  std::vector<int> order;         // domain assignment order (BFS)
  std::vector<int> pos_in_order;  // domain -> order position
  std::vector<long long> mult;    // current assignment
  // signed quadrant slots of each domain, grouped per crossing
  struct CSlot {
    int c;
    int8_t plus, minus;
  };
  std::vector<std::vector<CSlot>> cslots;
  // per crossing: assigned signed sum and unassigned +/- slot counts
  std::vector<long long> csum;
  std::vector<int8_t> cplus, cminus;
  std::vector<int> xslot_count;  // x-coordinate quadrant slots per domain
  std::vector<int> y_alpha_count, y_beta_count;
  long long nw_partial = 0;
  long long p4_partial = 0, p4_limit = 0;

  OracleSearch(const AdaptedDiagram& dg, const Generator& gx, int mc, int mt,
               int nm, unsigned long long b)
      : d(dg), x(gx), max_coeff(mc), mu_target(mt), nw_max(nm), budget(b) {
    in_x.assign(d.num_crossings(), 0);
    for (int c : x.point_on_alpha) in_x[c] = 1;
    // Spatial sweep order: crossings complete within a narrow band, which
    // keeps the window pruning tight.
    {
      const int N = d.surf.N;
      std::vector<std::pair<int, int>> keyed;
      for (size_t i = 0; i < d.domains.size(); ++i) {
        int best = N * N * 3;
        for (int f : d.domains[i].faces) {
          const auto& face = d.surf.faces[f];
          best = std::min(best, face.py * N + face.px);
        }
        keyed.emplace_back(best, static_cast<int>(i));
      }
      std::sort(keyed.begin(), keyed.end());
      for (auto& [key, dom] : keyed) order.push_back(dom);
    }
    pos_in_order.assign(d.domains.size(), -1);
    for (size_t i = 0; i < order.size(); ++i)
      pos_in_order[order[i]] = static_cast<int>(i);
    cslots.assign(d.domains.size(), {});
    csum.assign(d.num_crossings(), 0);
    cplus.assign(d.num_crossings(), 2);
    cminus.assign(d.num_crossings(), 2);
    static const int sign[4] = {+1, -1, +1, -1};  // NE,NW,SW,SE
    for (int c = 0; c < d.num_crossings(); ++c) {
      std::map<int, std::pair<int, int>> grouped;
      for (int k = 0; k < 4; ++k) {
        auto& g = grouped[d.crossings[c].quad[k]];
        if (sign[k] > 0)
          ++g.first;
        else
          ++g.second;
      }
      for (auto& [dom, pm] : grouped)
        cslots[dom].push_back(
            {c, static_cast<int8_t>(pm.first), static_cast<int8_t>(pm.second)});
    }
    xslot_count.assign(d.domains.size(), 0);
    for (int c : x.point_on_alpha)
      for (int k = 0; k < 4; ++k) ++xslot_count[d.crossings[c].quad[k]];
    mult.assign(d.domains.size(), 0);
    y_alpha_count.assign(d.alpha.size(), 0);
    y_beta_count.assign(d.beta.size(), 0);
    // p = mu - e and e >= -nw on these diagrams, so p4 is capped.
    p4_limit = 4LL * mu_target + 4LL * nw_max;
  }

  bool crossing_check(int c, int* yflag) const {
    long long q[4];
    for (int k = 0; k < 4; ++k) q[k] = mult[d.crossings[c].quad[k]];
    long long cv = q[0] - q[1] + q[2] - q[3];
    long long yf = (in_x[c] ? 1 : 0) - cv;
    if (yf != 0 && yf != 1) return false;
    *yflag = static_cast<int>(yf);
    return true;
  }

  void search(size_t k) {
    if (++result.nodes > budget) {
      result.complete = false;
      return;
    }
    if (k == order.size()) {
      emit();
      return;
    }
    int dom = order[k];
    bool is_bp = d.domains[dom].basepoint >= 0;
    for (long long v = 0; v <= max_coeff; ++v) {
      if (is_bp && nw_partial + v > nw_max) break;
      if (p4_partial + v * xslot_count[dom] > p4_limit) break;
      mult[dom] = v;
      nw_partial += is_bp ? v : 0;
      p4_partial += v * xslot_count[dom];
      long long p4y_delta = 0;
      bool ok = true;
      std::vector<std::pair<int, int>> bumped;
      for (const CSlot& s : cslots[dom]) {
        csum[s.c] += v * (s.plus - s.minus);
        cplus[s.c] -= s.plus;
        cminus[s.c] -= s.minus;
        if (!ok) continue;  // keep the updates consistent for the undo
        // Window of reachable c(v) against the allowed {rhsx-1, rhsx}.
        long long lo = csum[s.c] - (long long)max_coeff * cminus[s.c];
        long long hi = csum[s.c] + (long long)max_coeff * cplus[s.c];
        long long rhsx = in_x[s.c] ? 1 : 0;
        if (hi < rhsx - 1 || lo > rhsx) {
          ok = false;
          continue;
        }
        if (cplus[s.c] == 0 && cminus[s.c] == 0) {
          long long yf = rhsx - csum[s.c];
          if (yf == 1) {
            const Crossing& cr = d.crossings[s.c];
            bumped.emplace_back(cr.alpha, cr.beta);
            ++y_alpha_count[cr.alpha];
            ++y_beta_count[cr.beta];
            long long qsum = 0;
            for (int q = 0; q < 4; ++q) qsum += mult[cr.quad[q]];
            p4y_delta += qsum;
            if (y_alpha_count[cr.alpha] > 1 || y_beta_count[cr.beta] > 1 ||
                p4_partial + p4y_delta > p4_limit)
              ok = false;
          }
        }
      }
      p4_partial += p4y_delta;
      if (ok && result.complete) search(k + 1);
      for (auto [a, b] : bumped) {
        --y_alpha_count[a];
        --y_beta_count[b];
      }
      for (const CSlot& s : cslots[dom]) {
        csum[s.c] -= v * (s.plus - s.minus);
        cplus[s.c] += s.plus;
        cminus[s.c] += s.minus;
      }
      p4_partial -= p4y_delta + v * xslot_count[dom];
      nw_partial -= is_bp ? v : 0;
      mult[dom] = 0;
      if (!result.complete) return;
    }
  }

  void emit() {
    std::vector<int> y_on_alpha(d.alpha.size(), -1);
    for (int c = 0; c < d.num_crossings(); ++c) {
      int yf = 0;
      if (!crossing_check(c, &yf)) return;
      if (yf == 1) {
        const Crossing& cr = d.crossings[c];
        if (y_on_alpha[cr.alpha] >= 0) return;
        y_on_alpha[cr.alpha] = c;
      }
    }
    std::vector<char> used_beta(d.beta.size(), 0);
    for (int c : y_on_alpha) {
      if (c < 0) return;
      if (used_beta[d.crossings[c].beta]) return;
      used_beta[d.crossings[c].beta] = 1;
    }
    Generator y;
    y.point_on_alpha = y_on_alpha;
    auto st = domain_stats(d, mult, x, y);
    if (st.mu4 != 4LL * mu_target) return;
    DifferentialTerm t;
    t.y = y;
    t.domain = mult;
    t.upower = static_cast<int>(st.nw);
    t.shape = DomainShape::Rectangle;  // shape is not classified here
    result.terms.push_back(std::move(t));
  }
};

}  // namespace

OracleResult oracle_search(const AdaptedDiagram& d, const Generator& x,
                           int max_coeff, int mu_target, int nw_max,
                           unsigned long long node_budget) {
  OracleSearch s(d, x, max_coeff, mu_target, nw_max, node_budget);
  s.search(0);
  std::sort(s.result.terms.begin(), s.result.terms.end(),
            [](const DifferentialTerm& a, const DifferentialTerm& b) {
              if (a.y.point_on_alpha != b.y.point_on_alpha)
                return a.y.point_on_alpha < b.y.point_on_alpha;
              return a.domain < b.domain;
            });
  return s.result;
}

std::vector<std::string> term_keys(const std::vector<DifferentialTerm>& ts) {
  std::vector<std::string> keys;
  for (const auto& t : ts) {
    std::ostringstream s;
    s << generator_key(t.y) << "|";
    for (long long v : t.domain) s << v << ",";
    keys.push_back(s.str());
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace hftwo
