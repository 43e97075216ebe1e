//! Recommendation graph generation and structural metrics.
//!
//! Two generators are provided: a preferential-attachment graph whose
//! undirected edges are replaced by directed edge pairs (every
//! recommendation is mutual), and a directed-attachment variant in which the
//! fraction of mutual links is tunable. Both are deterministic in
//! `(parameters, seed)`.

use std::collections::BTreeMap;
use std::collections::HashSet;
use std::io::{BufRead, Write};

use rand::Rng;

use crate::error::{Error, Result};
use crate::rng;

/// Identifier of a video in the catalog, 1-based.
///
/// Index 0 is reserved for the request-source state of the transition matrix
/// and never appears inside a [`RecommendationGraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VideoId(u32);

impl VideoId {
    /// Wrap a 1-based id. Panics on 0.
    pub fn new(id: u32) -> Self {
        assert!(id >= 1, "video ids are 1-based; 0 is the request-source state");
        VideoId(id)
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Zero-based position in per-video storage.
    pub(crate) fn idx(self) -> usize {
        (self.0 - 1) as usize
    }

    pub(crate) fn from_idx(idx: usize) -> Self {
        VideoId(idx as u32 + 1)
    }

    /// Catalog-index distance |i - j|, the similarity proxy used for
    /// recommendation weights.
    pub fn distance(self, other: VideoId) -> u32 {
        self.0.abs_diff(other.0)
    }
}

impl std::fmt::Display for VideoId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which degree notion a histogram counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeMode {
    In,
    Out,
    /// Degree of the undirected support: neighbors adjacent in either direction.
    Undirected,
}

impl std::fmt::Display for DegreeMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DegreeMode::In => write!(f, "in"),
            DegreeMode::Out => write!(f, "out"),
            DegreeMode::Undirected => write!(f, "undirected"),
        }
    }
}

/// Histogram of node degrees: `degree -> number of nodes`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeHistogram {
    pub mode: DegreeMode,
    counts: BTreeMap<u32, u32>,
}

impl DegreeHistogram {
    pub fn counts(&self) -> &BTreeMap<u32, u32> {
        &self.counts
    }

    /// Total node count (sum of all bucket counts).
    pub fn total(&self) -> u64 {
        self.counts.values().map(|&c| c as u64).sum()
    }

    /// `(degree, count)` points with positive degree, for log-log fitting.
    pub fn points(&self) -> Vec<(f64, f64)> {
        self.counts
            .iter()
            .filter(|&(&d, &c)| d > 0 && c > 0)
            .map(|(&d, &c)| (d as f64, c as f64))
            .collect()
    }
}

/// Directed recommendation relation over a catalog of `n` videos.
///
/// Out-edges of video `i` are the videos it recommends. Adjacency lists are
/// kept sorted by id and free of self-loops and duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecommendationGraph {
    out_edges: Vec<Vec<VideoId>>,
    in_degree: Vec<u32>,
}

impl RecommendationGraph {
    fn with_nodes(n: usize) -> Self {
        RecommendationGraph {
            out_edges: vec![Vec::new(); n],
            in_degree: vec![0; n],
        }
    }

    fn add_edge(&mut self, src: VideoId, dst: VideoId) {
        debug_assert_ne!(src, dst);
        self.out_edges[src.idx()].push(dst);
        self.in_degree[dst.idx()] += 1;
    }

    fn sort_adjacency(&mut self) {
        for targets in &mut self.out_edges {
            targets.sort_unstable();
        }
    }

    /// Number of videos in the catalog.
    pub fn node_count(&self) -> usize {
        self.out_edges.len()
    }

    /// Total number of directed edges.
    pub fn edge_count(&self) -> usize {
        self.out_edges.iter().map(Vec::len).sum()
    }

    pub fn videos(&self) -> impl Iterator<Item = VideoId> + '_ {
        (0..self.node_count()).map(VideoId::from_idx)
    }

    /// Videos recommended by `video`, ascending by id.
    pub fn recommendations(&self, video: VideoId) -> &[VideoId] {
        &self.out_edges[video.idx()]
    }

    pub fn out_degree(&self, video: VideoId) -> u32 {
        self.out_edges[video.idx()].len() as u32
    }

    pub fn in_degree(&self, video: VideoId) -> u32 {
        self.in_degree[video.idx()]
    }

    pub fn has_edge(&self, src: VideoId, dst: VideoId) -> bool {
        self.out_edges[src.idx()].binary_search(&dst).is_ok()
    }

    /// Fraction of directed edges whose reverse edge also exists.
    /// A graph without edges yields 0.
    pub fn bidirectional_fraction(&self) -> f64 {
        let total = self.edge_count();
        if total == 0 {
            return 0.0;
        }
        let mutual = self
            .videos()
            .flat_map(|src| self.recommendations(src).iter().map(move |&dst| (src, dst)))
            .filter(|&(src, dst)| self.has_edge(dst, src))
            .count();
        mutual as f64 / total as f64
    }

    /// Neighbor sets of the undirected support (edge in either direction),
    /// sorted by id.
    fn undirected_neighbors(&self) -> Vec<Vec<u32>> {
        let n = self.node_count();
        let mut sets: Vec<HashSet<u32>> = vec![HashSet::new(); n];
        for src in self.videos() {
            for &dst in self.recommendations(src) {
                sets[src.idx()].insert(dst.get());
                sets[dst.idx()].insert(src.get());
            }
        }
        sets.into_iter()
            .map(|s| {
                let mut v: Vec<u32> = s.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect()
    }

    /// Histogram of node degrees for the requested mode.
    pub fn degree_distribution(&self, mode: DegreeMode) -> DegreeHistogram {
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        match mode {
            DegreeMode::In => {
                for &d in &self.in_degree {
                    *counts.entry(d).or_insert(0) += 1;
                }
            }
            DegreeMode::Out => {
                for targets in &self.out_edges {
                    *counts.entry(targets.len() as u32).or_insert(0) += 1;
                }
            }
            DegreeMode::Undirected => {
                for neighbors in self.undirected_neighbors() {
                    *counts.entry(neighbors.len() as u32).or_insert(0) += 1;
                }
            }
        }
        DegreeHistogram { mode, counts }
    }

    /// Mean local clustering coefficient of the undirected support.
    /// Nodes with fewer than two neighbors contribute 0.
    pub fn clustering_coefficient(&self) -> f64 {
        let neighbors = self.undirected_neighbors();
        let n = self.node_count();
        if n == 0 {
            return 0.0;
        }
        let mut total = 0.0;
        for nbrs in &neighbors {
            let deg = nbrs.len();
            if deg < 2 {
                continue;
            }
            let mut closed = 0usize;
            for (a_pos, &a) in nbrs.iter().enumerate() {
                let a_nbrs = &neighbors[(a - 1) as usize];
                for &b in &nbrs[a_pos + 1..] {
                    if a_nbrs.binary_search(&b).is_ok() {
                        closed += 1;
                    }
                }
            }
            total += closed as f64 / (deg * (deg - 1) / 2) as f64;
        }
        total / n as f64
    }

    /// Mean shortest-path length of the undirected support.
    ///
    /// Exact over all source nodes for catalogs up to
    /// [`PATH_LENGTH_EXACT_LIMIT`]; above that, estimated from
    /// [`PATH_LENGTH_SAMPLE`] evenly spaced BFS sources and flagged as an
    /// estimate. Errors if any sampled source cannot reach every node.
    pub fn characteristic_path_length(&self) -> Result<PathLength> {
        let n = self.node_count();
        if n < 2 {
            return Err(Error::InvalidParameter(
                "path length needs at least two nodes".into(),
            ));
        }
        let neighbors = self.undirected_neighbors();
        let exact = n <= PATH_LENGTH_EXACT_LIMIT;
        let sources: Vec<usize> = if exact {
            (0..n).collect()
        } else {
            // Deterministic evenly spaced sample.
            let stride = n as f64 / PATH_LENGTH_SAMPLE as f64;
            (0..PATH_LENGTH_SAMPLE)
                .map(|k| (k as f64 * stride) as usize)
                .collect()
        };

        let mut sum = 0u64;
        let mut pairs = 0u64;
        let mut dist = vec![u32::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        for &src in &sources {
            dist.iter_mut().for_each(|d| *d = u32::MAX);
            dist[src] = 0;
            queue.clear();
            queue.push_back(src);
            let mut reached = 1usize;
            while let Some(u) = queue.pop_front() {
                for &v in &neighbors[u] {
                    let vi = (v - 1) as usize;
                    if dist[vi] == u32::MAX {
                        dist[vi] = dist[u] + 1;
                        reached += 1;
                        queue.push_back(vi);
                    }
                }
            }
            if reached < n {
                return Err(Error::Disconnected { unreachable: n - reached });
            }
            sum += dist.iter().map(|&d| d as u64).sum::<u64>();
            pairs += (n - 1) as u64;
        }
        Ok(PathLength {
            mean: sum as f64 / pairs as f64,
            exact,
            sources: sources.len(),
        })
    }

    fn validate(&self) -> Result<()> {
        let n = self.node_count();
        for src in self.videos() {
            let targets = self.recommendations(src);
            for window in targets.windows(2) {
                if window[0] == window[1] {
                    return Err(Error::Format(format!("duplicate edge {src} {}", window[0])));
                }
            }
            for &dst in targets {
                if dst == src {
                    return Err(Error::Format(format!("self-loop at {src}")));
                }
                if dst.idx() >= n {
                    return Err(Error::Format(format!("edge target {dst} out of range")));
                }
            }
        }
        Ok(())
    }

    /// Serialize as the line-oriented exchange format: a `n=<n> directed=true`
    /// header, then one `src dst` pair per line ascending by `(src, dst)`.
    pub fn write_to<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "n={} directed=true", self.node_count())?;
        for src in self.videos() {
            for &dst in self.recommendations(src) {
                writeln!(w, "{src} {dst}")?;
            }
        }
        Ok(())
    }

    /// Parse the exchange format produced by [`write_to`](Self::write_to).
    pub fn read_from<R: BufRead>(r: R) -> Result<Self> {
        let mut lines = r.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Format("empty graph file".into()))??;
        let n = parse_header(&header)?;
        let mut graph = RecommendationGraph::with_nodes(n);
        for line in lines {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let mut parts = trimmed.split_whitespace();
            let src: u32 = parse_id(parts.next(), trimmed)?;
            let dst: u32 = parse_id(parts.next(), trimmed)?;
            if parts.next().is_some() {
                return Err(Error::Format(format!("trailing tokens in edge line '{trimmed}'")));
            }
            if src == 0 || dst == 0 || src as usize > n || dst as usize > n {
                return Err(Error::Format(format!("edge '{trimmed}' out of range for n={n}")));
            }
            graph.add_edge(VideoId::new(src), VideoId::new(dst));
        }
        graph.sort_adjacency();
        graph.validate()?;
        Ok(graph)
    }
}

fn parse_header(header: &str) -> Result<usize> {
    let mut n = None;
    for token in header.split_whitespace() {
        match token.split_once('=') {
            Some(("n", v)) => {
                n = Some(v.parse::<usize>().map_err(|_| {
                    Error::Format(format!("bad node count '{v}' in graph header"))
                })?);
            }
            Some(("directed", "true")) => {}
            _ => return Err(Error::Format(format!("unexpected header token '{token}'"))),
        }
    }
    n.ok_or_else(|| Error::Format("graph header missing n=<count>".into()))
}

fn parse_id(token: Option<&str>, line: &str) -> Result<u32> {
    token
        .ok_or_else(|| Error::Format(format!("incomplete edge line '{line}'")))?
        .parse::<u32>()
        .map_err(|_| Error::Format(format!("bad id in edge line '{line}'")))
}

/// Characteristic path length result; `exact` is false when estimated from a
/// BFS source sample of size `sources`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathLength {
    pub mean: f64,
    pub exact: bool,
    pub sources: usize,
}

/// All-pairs BFS above this size is replaced by source sampling.
pub const PATH_LENGTH_EXACT_LIMIT: usize = 2000;
/// Number of BFS sources used for the sampled estimate.
pub const PATH_LENGTH_SAMPLE: usize = 200;

/// Multiset of node indices where each node appears once per degree unit;
/// uniform draws from it are degree-proportional draws.
struct DegreeUrn {
    slots: Vec<usize>,
}

impl DegreeUrn {
    fn new() -> Self {
        DegreeUrn { slots: Vec::new() }
    }

    fn bump(&mut self, node: usize) {
        self.slots.push(node);
    }

    /// Degree-proportional draw; uniform over `existing` while all degrees
    /// are still zero.
    fn draw<R: Rng>(&self, rng: &mut R, existing: usize) -> usize {
        if self.slots.is_empty() {
            rng.random_range(0..existing)
        } else {
            self.slots[rng.random_range(0..self.slots.len())]
        }
    }
}

/// Generate the mutual-recommendation graph: preferential attachment on an
/// undirected graph, then each undirected edge becomes two directed edges.
///
/// The seed component is a ring over the first `m` nodes (a single edge for
/// `m = 2`, a lone node for `m = 1`). Each subsequent node attaches `m` edges
/// to distinct existing nodes, drawn one at a time in proportion to current
/// degree with degrees updated after every accepted edge.
pub fn generate_ba_graph(n: usize, m: usize, seed: u64) -> Result<RecommendationGraph> {
    validate_sizes(n, m)?;
    let mut undirected: Vec<(usize, usize)> = Vec::with_capacity(m + m * (n - m));
    let mut urn = DegreeUrn::new();
    let mut add = |edges: &mut Vec<(usize, usize)>, urn: &mut DegreeUrn, a: usize, b: usize| {
        edges.push((a, b));
        urn.bump(a);
        urn.bump(b);
    };

    match m {
        1 => {}
        2 => add(&mut undirected, &mut urn, 0, 1),
        _ => {
            for i in 0..m {
                add(&mut undirected, &mut urn, i, (i + 1) % m);
            }
        }
    }

    for v in m..n {
        let mut chosen: Vec<usize> = Vec::with_capacity(m);
        for edge_slot in 0..m {
            let mut rng = rng::stream(seed, &[rng::salt::GRAPH, v as u64, edge_slot as u64]);
            let target = loop {
                let t = urn.draw(&mut rng, v);
                if !chosen.contains(&t) {
                    break t;
                }
            };
            chosen.push(target);
            add(&mut undirected, &mut urn, v, target);
        }
    }

    let mut graph = RecommendationGraph::with_nodes(n);
    for (a, b) in undirected {
        graph.add_edge(VideoId::from_idx(a), VideoId::from_idx(b));
        graph.add_edge(VideoId::from_idx(b), VideoId::from_idx(a));
    }
    graph.sort_adjacency();
    Ok(graph)
}

/// Generate the directed-attachment graph with tunable link reciprocity.
///
/// Each new node accumulates exactly `m` incident links. Per attempt: with
/// probability `p_out` a link from the new node to an existing node drawn in
/// proportion to in-degree; with probability `p_in` a link from an existing
/// node drawn in proportion to out-degree to the new node; otherwise a link
/// between two existing nodes (source in proportion to in-degree, target in
/// proportion to out-degree) that does not count toward the quota. Attempts
/// that would duplicate an edge or form a self-loop are redrawn.
pub fn generate_directed_graph(
    n: usize,
    m: usize,
    p_in: f64,
    p_out: f64,
    seed: u64,
) -> Result<RecommendationGraph> {
    validate_sizes(n, m)?;
    if !(0.0..=1.0).contains(&p_in) || !(0.0..=1.0).contains(&p_out) {
        return Err(Error::InvalidParameter(format!(
            "p_in and p_out must lie in [0, 1], got p_in={p_in} p_out={p_out}"
        )));
    }
    if p_in + p_out > 1.0 {
        return Err(Error::InvalidParameter(format!(
            "p_in + p_out must not exceed 1, got {}",
            p_in + p_out
        )));
    }
    if p_in + p_out == 0.0 {
        return Err(Error::InvalidParameter(
            "p_in + p_out must be positive or new nodes can never connect".into(),
        ));
    }

    let mut edges: HashSet<(usize, usize)> = HashSet::new();
    let mut ordered: Vec<(usize, usize)> = Vec::new();
    let mut in_urn = DegreeUrn::new();
    let mut out_urn = DegreeUrn::new();
    let mut add = |edges: &mut HashSet<(usize, usize)>,
                   ordered: &mut Vec<(usize, usize)>,
                   in_urn: &mut DegreeUrn,
                   out_urn: &mut DegreeUrn,
                   src: usize,
                   dst: usize| {
        edges.insert((src, dst));
        ordered.push((src, dst));
        out_urn.bump(src);
        in_urn.bump(dst);
    };

    // Seed component: a directed ring, so every seed node starts with one
    // in-link and one out-link.
    if m >= 2 {
        for i in 0..m {
            add(&mut edges, &mut ordered, &mut in_urn, &mut out_urn, i, (i + 1) % m);
        }
    }

    for v in m..n {
        let mut quota = 0usize;
        let mut attempt = 0u64;
        while quota < m {
            if attempt > MAX_ATTACH_ATTEMPTS * m as u64 {
                return Err(Error::InvalidParameter(format!(
                    "could not place {m} links for node {} after {attempt} attempts",
                    v + 1
                )));
            }
            let mut rng = rng::stream(seed, &[rng::salt::GRAPH, v as u64, attempt]);
            attempt += 1;
            let coin: f64 = rng.random();
            if coin < p_out {
                let target = in_urn.draw(&mut rng, v);
                if edges.contains(&(v, target)) {
                    continue;
                }
                add(&mut edges, &mut ordered, &mut in_urn, &mut out_urn, v, target);
                quota += 1;
            } else if coin < p_out + p_in {
                let source = out_urn.draw(&mut rng, v);
                if edges.contains(&(source, v)) {
                    continue;
                }
                add(&mut edges, &mut ordered, &mut in_urn, &mut out_urn, source, v);
                quota += 1;
            } else {
                let source = in_urn.draw(&mut rng, v);
                let target = out_urn.draw(&mut rng, v);
                if source == target || edges.contains(&(source, target)) {
                    continue;
                }
                add(&mut edges, &mut ordered, &mut in_urn, &mut out_urn, source, target);
            }
        }
    }

    let mut graph = RecommendationGraph::with_nodes(n);
    for (src, dst) in ordered {
        graph.add_edge(VideoId::from_idx(src), VideoId::from_idx(dst));
    }
    graph.sort_adjacency();
    Ok(graph)
}

const MAX_ATTACH_ATTEMPTS: u64 = 10_000;

fn validate_sizes(n: usize, m: usize) -> Result<()> {
    if m < 1 {
        return Err(Error::InvalidParameter(format!("m must be at least 1, got {m}")));
    }
    if n <= m {
        return Err(Error::InvalidParameter(format!(
            "node count must exceed the seed size: n={n}, m={m}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph_from_edges(n: usize, edges: &[(u32, u32)]) -> RecommendationGraph {
        let mut g = RecommendationGraph::with_nodes(n);
        for &(a, b) in edges {
            g.add_edge(VideoId::new(a), VideoId::new(b));
        }
        g.sort_adjacency();
        g
    }

    fn bidirected(n: usize, pairs: &[(u32, u32)]) -> RecommendationGraph {
        let mut edges = Vec::new();
        for &(a, b) in pairs {
            edges.push((a, b));
            edges.push((b, a));
        }
        graph_from_edges(n, &edges)
    }

    fn complete(n: u32) -> RecommendationGraph {
        let mut pairs = Vec::new();
        for a in 1..=n {
            for b in (a + 1)..=n {
                pairs.push((a, b));
            }
        }
        bidirected(n as usize, &pairs)
    }

    #[test]
    fn ba_with_forced_attachment_is_complete() {
        // n = m + 1 leaves each new node no choice but to attach everywhere.
        let g = generate_ba_graph(4, 3, 7).unwrap();
        assert_eq!(g.node_count(), 4);
        assert_eq!(g.edge_count(), 12);
        for a in g.videos() {
            for b in g.videos() {
                if a != b {
                    assert!(g.has_edge(a, b), "missing edge {a}->{b}");
                }
            }
        }
    }

    #[test]
    fn ba_edge_count_matches_construction() {
        // Ring seed contributes m undirected edges, each new node m more.
        let g = generate_ba_graph(1000, 20, 3).unwrap();
        let undirected = g.edge_count() / 2;
        assert_eq!(undirected, 20 + 20 * (1000 - 20));
        assert_eq!(undirected, 19620);
    }

    #[test]
    fn ba_is_fully_bidirectional_with_min_degree_m() {
        let g = generate_ba_graph(300, 5, 11).unwrap();
        assert_eq!(g.bidirectional_fraction(), 1.0);
        let hist = g.degree_distribution(DegreeMode::Undirected);
        let min_degree = *hist.counts().keys().next().unwrap();
        assert!(min_degree >= 5);
        assert_eq!(hist.total(), 300);
    }

    #[test]
    fn ba_has_no_self_loops_or_duplicates() {
        let g = generate_ba_graph(500, 7, 5).unwrap();
        g.validate().unwrap();
    }

    #[test]
    fn ba_rejects_bad_sizes() {
        assert!(generate_ba_graph(5, 5, 0).is_err());
        assert!(generate_ba_graph(5, 0, 0).is_err());
    }

    #[test]
    fn ba_is_deterministic_in_seed() {
        let a = generate_ba_graph(200, 4, 99).unwrap();
        let b = generate_ba_graph(200, 4, 99).unwrap();
        let c = generate_ba_graph(200, 4, 100).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn directed_pure_out_gives_out_degree_m() {
        let g = generate_directed_graph(400, 3, 0.0, 1.0, 21).unwrap();
        for v in g.videos().skip(3) {
            assert_eq!(g.out_degree(v), 3, "node {v}");
        }
        // In-links concentrate on the seed ring: nothing else can ever gain
        // in-degree when targets are drawn in proportion to in-degree.
        for v in g.videos().skip(3) {
            assert_eq!(g.in_degree(v), 0, "node {v}");
        }
    }

    #[test]
    fn directed_quota_counts_incident_links() {
        let g = generate_directed_graph(300, 6, 0.3, 0.3, 8).unwrap();
        g.validate().unwrap();
        // Quota edges touch the new node; third-case edges do not. Seed ring
        // in/out degrees are 1 each, and every node's quota edges were split
        // between in-links and out-links; totals cannot be reconstructed per
        // node after later nodes attach, so check the global count instead:
        // ring (m) + quota (m per new node) + any number of third-case edges.
        assert!(g.edge_count() >= 6 + 6 * (300 - 6));
    }

    #[test]
    fn directed_rejects_bad_probabilities() {
        assert!(generate_directed_graph(10, 2, 0.7, 0.7, 0).is_err());
        assert!(generate_directed_graph(10, 2, -0.1, 0.5, 0).is_err());
        assert!(generate_directed_graph(10, 2, 0.0, 0.0, 0).is_err());
        assert!(generate_directed_graph(2, 2, 0.4, 0.4, 0).is_err());
    }

    #[test]
    fn directed_is_deterministic_in_seed() {
        let a = generate_directed_graph(150, 4, 0.4, 0.4, 5).unwrap();
        let b = generate_directed_graph(150, 4, 0.4, 0.4, 5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn degree_histogram_complete_graph() {
        let g = complete(4);
        for mode in [DegreeMode::In, DegreeMode::Out, DegreeMode::Undirected] {
            let hist = g.degree_distribution(mode);
            assert_eq!(hist.counts().get(&3), Some(&4), "{mode}");
            assert_eq!(hist.total(), 4);
        }
    }

    #[test]
    fn degree_histogram_ring() {
        let g = bidirected(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]);
        let hist = g.degree_distribution(DegreeMode::Undirected);
        assert_eq!(hist.counts().get(&2), Some(&5));
    }

    #[test]
    fn clustering_complete_and_star() {
        assert_eq!(complete(4).clustering_coefficient(), 1.0);
        let star = bidirected(6, &[(1, 2), (1, 3), (1, 4), (1, 5), (1, 6)]);
        assert_eq!(star.clustering_coefficient(), 0.0);
    }

    #[test]
    fn path_length_complete_graph() {
        let pl = complete(6).characteristic_path_length().unwrap();
        assert_eq!(pl.mean, 1.0);
        assert!(pl.exact);
    }

    #[test]
    fn path_length_three_node_path() {
        let g = bidirected(3, &[(1, 2), (2, 3)]);
        let pl = g.characteristic_path_length().unwrap();
        assert!((pl.mean - 4.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn path_length_reports_disconnection() {
        let g = bidirected(4, &[(1, 2), (3, 4)]);
        match g.characteristic_path_length() {
            Err(Error::Disconnected { unreachable: 2 }) => {}
            other => panic!("expected disconnection, got {other:?}"),
        }
    }

    #[test]
    fn bidirectional_fraction_counts_mutual_edges() {
        let g = graph_from_edges(3, &[(1, 2), (2, 1), (2, 3)]);
        assert!((g.bidirectional_fraction() - 2.0 / 3.0).abs() < 1e-12);
        let empty = RecommendationGraph::with_nodes(3);
        assert_eq!(empty.bidirectional_fraction(), 0.0);
    }

    #[test]
    fn serialization_round_trips() {
        let g = generate_directed_graph(60, 3, 0.4, 0.4, 17).unwrap();
        let mut buf = Vec::new();
        g.write_to(&mut buf).unwrap();
        let parsed = RecommendationGraph::read_from(buf.as_slice()).unwrap();
        assert_eq!(g, parsed);
        let mut again = Vec::new();
        parsed.write_to(&mut again).unwrap();
        assert_eq!(buf, again);
    }

    #[test]
    fn read_rejects_malformed_input() {
        assert!(RecommendationGraph::read_from("".as_bytes()).is_err());
        assert!(RecommendationGraph::read_from("n=3 directed=true\n1 4\n".as_bytes()).is_err());
        assert!(RecommendationGraph::read_from("n=3 directed=true\n0 1\n".as_bytes()).is_err());
        assert!(RecommendationGraph::read_from("nodes=3\n".as_bytes()).is_err());
        assert!(RecommendationGraph::read_from("n=3 directed=true\n1 1\n".as_bytes()).is_err());
        assert!(
            RecommendationGraph::read_from("n=3 directed=true\n1 2\n1 2\n".as_bytes()).is_err()
        );
    }
}
