//! Canonical labelling of loopless multigraphs.
//!
//! Colour refinement with edge multiplicities as edge colours, plus
//! individualization backtracking over the refined classes. The canonical
//! form is the minimum leaf encoding over the whole search tree — no orbit
//! pruning, which keeps the procedure obviously exhaustive at the graph
//! sizes this crate works at. Every leaf that achieves the minimum yields
//! one automorphism, and together they yield all of them.

use super::Multigraph;

/// Canonical form with the relabelling that achieves it and the full
/// automorphism group.
#[derive(Debug, Clone)]
pub struct CanonicalCertificate {
    /// `[n, upper-triangle multiplicities in canonical order]`.
    pub form: Vec<u8>,
    /// Old vertex -> canonical label.
    pub relabeling: Vec<usize>,
    /// Each map sends old vertex -> old vertex; identity always included.
    pub automorphisms: Vec<Vec<usize>>,
}

struct Search {
    n: usize,
    mult: Vec<Vec<u8>>,
    best: Option<Vec<u8>>,
    best_perms: Vec<Vec<usize>>,
}

pub(crate) fn certificate(g: &Multigraph) -> CanonicalCertificate {
    let n = g.n();
    assert!(n <= 255, "canonical form supports at most 255 vertices");
    let mut mult = vec![vec![0u8; n]; n];
    for e in g.edges() {
        assert!(mult[e.u][e.v] < 255, "multiplicity above 255");
        mult[e.u][e.v] += 1;
        mult[e.v][e.u] += 1;
    }
    if n == 0 {
        return CanonicalCertificate {
            form: vec![0],
            relabeling: Vec::new(),
            automorphisms: vec![Vec::new()],
        };
    }
    let mut search = Search {
        n,
        mult,
        best: None,
        best_perms: Vec::new(),
    };
    let colors = search.refine(vec![0; n]);
    search.descend(colors);

    let form = search.best.expect("at least one leaf");
    let relabeling = search.best_perms[0].clone();
    let mut inv0 = vec![0usize; n];
    for (old, &canon) in relabeling.iter().enumerate() {
        inv0[canon] = old;
    }
    let mut automorphisms: Vec<Vec<usize>> = search
        .best_perms
        .iter()
        .map(|p| (0..n).map(|x| inv0[p[x]]).collect())
        .collect();
    automorphisms.sort();
    automorphisms.dedup();
    CanonicalCertificate {
        form,
        relabeling,
        automorphisms,
    }
}

impl Search {
    /// Refines vertex colours to a stable partition: vertices get equal
    /// colours only if they agree on their colour and on the multiset of
    /// (neighbour colour, multiplicity) pairs. Colour values are ranks in
    /// signature order, so they are label-independent.
    fn refine(&self, mut colors: Vec<usize>) -> Vec<usize> {
        loop {
            let mut sigs: Vec<(Vec<(usize, u8)>, usize)> = Vec::with_capacity(self.n);
            for v in 0..self.n {
                let mut neigh: Vec<(usize, u8)> = (0..self.n)
                    .filter(|&u| self.mult[v][u] > 0)
                    .map(|u| (colors[u], self.mult[v][u]))
                    .collect();
                neigh.sort_unstable();
                let mut sig = vec![(colors[v], 0u8)];
                sig.extend(neigh);
                sigs.push((sig, v));
            }
            let mut sorted = sigs.clone();
            sorted.sort();
            let mut new_colors = vec![0usize; self.n];
            let mut rank = 0usize;
            for i in 0..self.n {
                if i > 0 && sorted[i].0 != sorted[i - 1].0 {
                    rank += 1;
                }
                new_colors[sorted[i].1] = rank;
            }
            if new_colors == colors {
                return colors;
            }
            colors = new_colors;
        }
    }

    fn descend(&mut self, colors: Vec<usize>) {
        // target cell: smallest non-singleton class, then smallest colour
        let mut class_size = vec![0usize; self.n];
        for &c in &colors {
            class_size[c] += 1;
        }
        let target = (0..self.n)
            .filter(|&c| class_size[c] > 1)
            .min_by_key(|&c| (class_size[c], c));
        match target {
            None => self.leaf(&colors),
            Some(cell) => {
                let members: Vec<usize> =
                    (0..self.n).filter(|&v| colors[v] == cell).collect();
                for v in members {
                    let mut split: Vec<usize> = colors.iter().map(|&c| 2 * c + 1).collect();
                    split[v] -= 1;
                    let refined = self.refine(split);
                    self.descend(refined);
                }
            }
        }
    }

    fn leaf(&mut self, colors: &[usize]) {
        // discrete colouring: colour is the canonical label
        let mut inv = vec![0usize; self.n];
        for v in 0..self.n {
            inv[colors[v]] = v;
        }
        let mut enc = Vec::with_capacity(1 + self.n * (self.n - 1) / 2);
        enc.push(self.n as u8);
        for i in 0..self.n {
            for j in i + 1..self.n {
                enc.push(self.mult[inv[i]][inv[j]]);
            }
        }
        match &self.best {
            Some(best) if *best < enc => {}
            Some(best) if *best == enc => self.best_perms.push(colors.to_vec()),
            _ => {
                self.best = Some(enc);
                self.best_perms = vec![colors.to_vec()];
            }
        }
    }
}
