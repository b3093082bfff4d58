//! Strong paths between non-adjacent vertices.
//!
//! `u` and `v` are strong-linked when they have a common neighbor, or when there are two
//! vertex-disjoint chordless paths `u-x_1-..-x_r-v` and `u-y_1-..-y_s-v` (`r, s >= 2`) such that
//! every clique `{x_i, x_{i+1}, y_j, y_{j+1}}` of size four carries an attachment of type 1 or
//! type 2 built from vertices outside `X ∪ Y ∪ {u, v}`.

use serde::Serialize;

use super::{Budget, Search};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrongPathWitness {
    pub u: usize,
    pub v: usize,
    pub link: StrongLink,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum StrongLink {
    CommonNeighbor { w: usize },
    Paths { x: Vec<usize>, y: Vec<usize>, attachments: Vec<AttachmentRecord> },
}

/// Attachment covering the clique `{l1, l2, r1, r2}` where `{l1, l2} = {x_i, y_j}` and
/// `{r1, r2} = {x_{i+1}, y_{j+1}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AttachmentRecord {
    pub l1: usize,
    pub l2: usize,
    pub r1: usize,
    pub r2: usize,
    pub attachment: Attachment,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Attachment {
    /// `z` sees `l1, l2, r1` and not `r2`; `z_prime` sees `r1, r2, l1` and not `l2`; `z ≁ z_prime`.
    Type1 { z: usize, z_prime: usize },
    /// `z` has `2t+1` entries extending the four-clique, `z_prime` has `2t+2` entries forming a
    /// stable set, `z_prime[k-1]` seeing exactly `z_{k-1}, z_k` (with `z_0 = l1`, `z_{2t+2} = r1`).
    Type2 { t: usize, z: Vec<usize>, z_prime: Vec<usize> },
}

impl StrongPathWitness {
    /// All vertices the witness uses besides `u` and `v`.
    pub fn support(&self) -> VertexSet {
        match &self.link {
            StrongLink::CommonNeighbor { w } => VertexSet::singleton(*w),
            StrongLink::Paths { x, y, attachments } => {
                let mut s: VertexSet = x.iter().chain(y).collect();
                for a in attachments {
                    match &a.attachment {
                        Attachment::Type1 { z, z_prime } => s = s.with(*z).with(*z_prime),
                        Attachment::Type2 { z, z_prime, .. } => s = s.union(z.iter().chain(z_prime).collect()),
                    }
                }
                s
            }
        }
    }
}

/// All chordless `u`-`v` paths, each returned as its interior sequence. `None` if the path cap
/// or the deadline trips first.
pub fn induced_paths(g: &Graph, u: usize, v: usize, budget: &Budget) -> Option<Vec<Vec<usize>>> {
    struct Walk<'a> {
        g: &'a Graph,
        v: usize,
        budget: &'a Budget,
        path: Vec<usize>,
        out: Vec<Vec<usize>>,
    }
    impl Walk<'_> {
        // `blocked`: closed neighborhoods of every path vertex except the last, plus the path
        fn go(&mut self, last: usize, blocked: VertexSet) -> bool {
            if self.out.len() > self.budget.path_limit || self.budget.expired() {
                return false;
            }
            let cands = self.g.neighbors(last).difference(blocked);
            if cands.contains(self.v) {
                // an interior vertex adjacent to v must be the last one
                self.out.push(self.path[1..].to_vec());
                return true;
            }
            for x in cands {
                self.path.push(x);
                let ok = self.go(x, blocked.union(self.g.closed_neighbors(last)));
                self.path.pop();
                if !ok {
                    return false;
                }
            }
            true
        }
    }
    let mut w = Walk { g, v, budget, path: vec![u], out: Vec::new() };
    let start_blocked = VertexSet::singleton(u);
    if !w.go(u, start_blocked) || w.out.len() > budget.path_limit {
        return None;
    }
    Some(w.out)
}

enum Cover {
    Covered(Vec<AttachmentRecord>),
    Uncovered,
    Unknown,
}

fn labelings(xi: usize, xi1: usize, yj: usize, yj1: usize) -> [(usize, usize, usize, usize); 4] {
    [(xi, yj, xi1, yj1), (xi, yj, yj1, xi1), (yj, xi, xi1, yj1), (yj, xi, yj1, xi1)]
}

fn find_type1(g: &Graph, pool: VertexSet, l1: usize, l2: usize, r1: usize, r2: usize) -> Option<Attachment> {
    let zs = g.common_neighbors([l1, l2, r1].iter().collect(), pool).difference(g.neighbors(r2));
    let zps = g.common_neighbors([r1, r2, l1].iter().collect(), pool).difference(g.neighbors(l2));
    for z in zs {
        if let Some(zp) = zps.difference(g.closed_neighbors(z)).first() {
            return Some(Attachment::Type1 { z, z_prime: zp });
        }
    }
    None
}

struct Type2Search<'a> {
    g: &'a Graph,
    base: VertexSet,
    pool: VertexSet,
    core: VertexSet,
    l1: usize,
    r1: usize,
    len: usize,
    zs: Vec<usize>,
    zps: Vec<usize>,
}

impl Type2Search<'_> {
    fn used(&self) -> VertexSet {
        self.zs.iter().chain(&self.zps).collect()
    }

    fn z_set(&self) -> VertexSet {
        self.zs.iter().collect()
    }

    // next is z_k with k = zs.len() + 1
    fn pick_z(&mut self) -> bool {
        let g = self.g;
        let zp_set: VertexSet = self.zps.iter().collect();
        let cands = self
            .pool
            .difference(self.used())
            .iter()
            .filter(|&c| g.neighbors(c).intersection(self.base) == self.core)
            .filter(|&c| self.z_set().is_subset(g.neighbors(c)) && g.neighbors(c).is_disjoint(zp_set))
            .collect::<Vec<_>>();
        for c in cands {
            self.zs.push(c);
            if self.pick_z_prime() {
                return true;
            }
            self.zs.pop();
        }
        false
    }

    // next is z'_k with k = zps.len() + 1, seeing exactly z_{k-1}, z_k on base ∪ {z's}
    fn pick_z_prime(&mut self) -> bool {
        let g = self.g;
        let k = self.zps.len() + 1;
        let last = k == self.len + 1;
        let prev = if k == 1 { self.l1 } else { self.zs[k - 2] };
        let next = if last { self.r1 } else { self.zs[k - 1] };
        let want: VertexSet = [prev, next].iter().collect();
        let scope = self.base.union(self.z_set());
        let zp_set: VertexSet = self.zps.iter().collect();
        let cands: Vec<usize> = self
            .pool
            .difference(self.used())
            .iter()
            .filter(|&c| g.neighbors(c).intersection(scope) == want && g.neighbors(c).is_disjoint(zp_set))
            .collect();
        for c in cands {
            self.zps.push(c);
            let done = if last { true } else if self.zs.len() == self.len { self.pick_z_prime() } else { self.pick_z() };
            if done {
                return true;
            }
            self.zps.pop();
        }
        false
    }
}

fn find_type2(
    g: &Graph,
    base: VertexSet,
    pool: VertexSet,
    (l1, l2, r1, r2): (usize, usize, usize, usize),
    t: usize,
) -> Option<Attachment> {
    let core: VertexSet = [l1, l2, r1, r2].iter().collect();
    let mut s = Type2Search { g, base, pool, core, l1, r1, len: 2 * t + 1, zs: Vec::new(), zps: Vec::new() };
    s.pick_z().then_some(Attachment::Type2 { t, z: s.zs, z_prime: s.zps })
}

fn attach(g: &Graph, base: VertexSet, pool: VertexSet, k4: [usize; 4], budget: &Budget) -> Search<AttachmentRecord> {
    let [xi, xi1, yj, yj1] = k4;
    let labs = labelings(xi, xi1, yj, yj1);
    for &(l1, l2, r1, r2) in &labs {
        if let Some(a) = find_type1(g, pool, l1, l2, r1, r2) {
            return Search::Found(AttachmentRecord { l1, l2, r1, r2, attachment: a });
        }
    }
    let core: VertexSet = k4.iter().collect();
    let extenders = pool.iter().filter(|&c| g.neighbors(c).intersection(base) == core).count();
    let pool_size = pool.len();
    if extenders == 0 || pool_size < 3 {
        return Search::Absent;
    }
    let bound = ((pool_size - 3) / 4).min((extenders - 1) / 2);
    let cap = bound.min(budget.max_t);
    for t in 0..=cap {
        for &(l1, l2, r1, r2) in &labs {
            if let Some(a) = find_type2(g, base, pool, (l1, l2, r1, r2), t) {
                return Search::Found(AttachmentRecord { l1, l2, r1, r2, attachment: a });
            }
        }
    }
    if bound > budget.max_t {
        Search::Unknown(format!("type-2 attachment search capped at t = {}", budget.max_t))
    } else {
        Search::Absent
    }
}

fn cover(g: &Graph, u: usize, v: usize, x: &[usize], y: &[usize], budget: &Budget) -> Cover {
    let base: VertexSet = x.iter().chain(y).copied().collect::<VertexSet>().with(u).with(v);
    let pool = g.vertices().difference(base);
    let mut records = Vec::new();
    let mut unknown = false;
    for i in 0..x.len() - 1 {
        for j in 0..y.len() - 1 {
            let k4 = [x[i], x[i + 1], y[j], y[j + 1]];
            if !g.is_clique(k4.iter().collect()) {
                continue;
            }
            match attach(g, base, pool, k4, budget) {
                Search::Found(r) => records.push(r),
                Search::Absent => return Cover::Uncovered,
                Search::Unknown(_) => unknown = true,
            }
        }
    }
    if unknown {
        Cover::Unknown
    } else {
        Cover::Covered(records)
    }
}

/// Searches for a strong path linking non-adjacent `u` and `v`.
///
/// The common-neighbor clause is tried first (smallest common neighbor). Otherwise all pairs
/// of disjoint chordless paths are examined in lexicographic order; every four-clique across
/// consecutive pairs is tried under all four `{l, r}` labelings for a type-1 attachment, then
/// type-2 attachments for `t = 0, 1, ..`. The returned witness always passes
/// [`verify_strong_path_witness`].
pub fn find_strong_path(g: &Graph, u: usize, v: usize, budget: &Budget) -> Result<Search<StrongPathWitness>> {
    if u >= g.n() || v >= g.n() || u == v {
        return Err(Error::domain(format!("invalid pair {u}, {v}")));
    }
    if g.adjacent(u, v) {
        return Err(Error::domain(format!("{u} and {v} are adjacent")));
    }
    if let Some(w) = g.neighbors(u).intersection(g.neighbors(v)).first() {
        return Ok(Search::Found(StrongPathWitness { u, v, link: StrongLink::CommonNeighbor { w } }));
    }
    let Some(mut paths) = induced_paths(g, u, v, budget) else {
        return Ok(Search::Unknown(format!("induced path enumeration exceeded {} paths or the deadline", budget.path_limit)));
    };
    paths.retain(|p| p.len() >= 2);
    paths.sort();
    let sets: Vec<VertexSet> = paths.iter().map(|p| p.iter().collect()).collect();
    let mut unknown = None;
    for i in 0..paths.len() {
        for j in i + 1..paths.len() {
            if sets[i].intersects(sets[j]) {
                continue;
            }
            if budget.expired() {
                return Ok(Search::Unknown("deadline reached".into()));
            }
            match cover(g, u, v, &paths[i], &paths[j], budget) {
                Cover::Covered(attachments) => {
                    let link = StrongLink::Paths { x: paths[i].clone(), y: paths[j].clone(), attachments };
                    return Ok(Search::Found(StrongPathWitness { u, v, link }));
                }
                Cover::Uncovered => {}
                Cover::Unknown => unknown = Some(format!("type-2 attachment search capped at t = {}", budget.max_t)),
            }
        }
    }
    Ok(match unknown {
        Some(why) => Search::Unknown(why),
        None => Search::Absent,
    })
}

/// Checks every condition of the strong-path definition for `w` in `g`, independently of the
/// search that produced it.
pub fn verify_strong_path_witness(g: &Graph, w: &StrongPathWitness) -> bool {
    let (u, v) = (w.u, w.v);
    let n = g.n();
    if u >= n || v >= n || u == v || g.adjacent(u, v) {
        return false;
    }
    match &w.link {
        StrongLink::CommonNeighbor { w } => *w < n && g.adjacent(*w, u) && g.adjacent(*w, v),
        StrongLink::Paths { x, y, attachments } => verify_paths(g, u, v, x, y, attachments),
    }
}

fn sees_exactly(g: &Graph, z: usize, scope: VertexSet, want: &[usize]) -> bool {
    g.neighbors(z).intersection(scope) == want.iter().collect()
}

fn verify_paths(g: &Graph, u: usize, v: usize, x: &[usize], y: &[usize], atts: &[AttachmentRecord]) -> bool {
    if x.len() < 2 || y.len() < 2 {
        return false;
    }
    let full = |p: &[usize]| [&[u][..], p, &[v][..]].concat();
    if !g.is_induced_path(&full(x)) || !g.is_induced_path(&full(y)) {
        return false;
    }
    let xs: VertexSet = x.iter().collect();
    let ys: VertexSet = y.iter().collect();
    if xs.intersects(ys) {
        return false;
    }
    let base = xs.union(ys).with(u).with(v);
    let zpool = g.vertices().difference(base);

    for a in atts {
        if !verify_attachment(g, base, zpool, a) {
            return false;
        }
        // the record must sit on a real four-clique of consecutive pairs
        let l: VertexSet = [a.l1, a.l2].iter().collect();
        let r: VertexSet = [a.r1, a.r2].iter().collect();
        let on_k4 = (0..x.len() - 1).any(|i| {
            (0..y.len() - 1).any(|j| l == [x[i], y[j]].iter().collect() && r == [x[i + 1], y[j + 1]].iter().collect())
        });
        if !on_k4 {
            return false;
        }
    }
    for i in 0..x.len() - 1 {
        for j in 0..y.len() - 1 {
            let k4 = [x[i], x[i + 1], y[j], y[j + 1]];
            if !g.is_clique(k4.iter().collect()) {
                continue;
            }
            let l: VertexSet = [x[i], y[j]].iter().collect();
            let r: VertexSet = [x[i + 1], y[j + 1]].iter().collect();
            let covered = atts.iter().any(|a| {
                l == [a.l1, a.l2].iter().collect::<VertexSet>() && r == [a.r1, a.r2].iter().collect::<VertexSet>()
            });
            if !covered {
                return false;
            }
        }
    }
    true
}

fn verify_attachment(g: &Graph, base: VertexSet, zpool: VertexSet, a: &AttachmentRecord) -> bool {
    let (l1, l2, r1, r2) = (a.l1, a.l2, a.r1, a.r2);
    let k4: VertexSet = [l1, l2, r1, r2].iter().collect();
    if k4.len() != 4 || !g.is_clique(k4) {
        return false;
    }
    let sees = |z: usize, w: usize| g.adjacent(z, w);
    match &a.attachment {
        Attachment::Type1 { z, z_prime } => {
            let (z, zp) = (*z, *z_prime);
            zpool.contains(z)
                && zpool.contains(zp)
                && z != zp
                && !sees(z, zp)
                && sees(z, l1)
                && sees(z, l2)
                && sees(z, r1)
                && !sees(z, r2)
                && sees(zp, r1)
                && sees(zp, r2)
                && sees(zp, l1)
                && !sees(zp, l2)
        }
        Attachment::Type2 { t, z, z_prime } => {
            if z.len() != 2 * t + 1 || z_prime.len() != 2 * t + 2 {
                return false;
            }
            let zs: VertexSet = z.iter().collect();
            let zps: VertexSet = z_prime.iter().collect();
            if zs.len() != z.len() || zps.len() != z_prime.len() || zs.intersects(zps) {
                return false;
            }
            if !zs.union(zps).is_subset(zpool) {
                return false;
            }
            let q = k4.union(zs);
            if !g.is_clique(q) || !g.is_stable(zps) {
                return false;
            }
            if !z.iter().all(|&zi| sees_exactly(g, zi, base, &[l1, l2, r1, r2])) {
                return false;
            }
            let scope = q.union(base);
            (1..=2 * t + 2).all(|k| {
                let prev = if k == 1 { l1 } else { z[k - 2] };
                let next = if k == 2 * t + 2 { r1 } else { z[k - 1] };
                sees_exactly(g, z_prime[k - 1], scope, &[prev, next])
            })
        }
    }
}
