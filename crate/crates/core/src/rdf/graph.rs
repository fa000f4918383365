//! Indexed in-memory triple store.

use std::collections::{BTreeSet, HashMap};

use super::ntriples::render_triple;
use super::term::{Iri, Term, Triple};

type TermId = u32;

/// A set of triples with three permutation indexes (SPO, POS, OSP).
///
/// Terms are interned once and triples are stored as id triples, so any
/// pattern with bound positions resolves to a contiguous range scan of one
/// index. Insertion order never affects `matching` results or serialization.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    terms: Vec<Term>,
    ids: HashMap<Term, TermId>,
    spo: BTreeSet<[TermId; 3]>,
    pos: BTreeSet<[TermId; 3]>,
    osp: BTreeSet<[TermId; 3]>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.spo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spo.is_empty()
    }

    fn intern(&mut self, term: Term) -> TermId {
        if let Some(&id) = self.ids.get(&term) {
            return id;
        }
        let id = TermId::try_from(self.terms.len()).expect("term table overflow");
        self.terms.push(term.clone());
        self.ids.insert(term, id);
        id
    }

    fn id_of(&self, term: &Term) -> Option<TermId> {
        self.ids.get(term).copied()
    }

    /// Inserts a triple; returns false when it was already present.
    pub fn insert(&mut self, triple: Triple) -> bool {
        let s = self.intern(Term::Iri(triple.subject));
        let p = self.intern(Term::Iri(triple.predicate));
        let o = self.intern(triple.object);
        if self.spo.insert([s, p, o]) {
            self.pos.insert([p, o, s]);
            self.osp.insert([o, s, p]);
            true
        } else {
            false
        }
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        let key = (
            self.id_of(&Term::Iri(triple.subject.clone())),
            self.id_of(&Term::Iri(triple.predicate.clone())),
            self.id_of(&triple.object),
        );
        match key {
            (Some(s), Some(p), Some(o)) => self.spo.contains(&[s, p, o]),
            _ => false,
        }
    }

    /// Inserts every triple of `other`; returns the number actually added.
    pub fn merge(&mut self, other: &Graph) -> usize {
        let mut added = 0;
        for triple in other.iter() {
            if self.insert(triple) {
                added += 1;
            }
        }
        added
    }

    /// Iterates all triples in an unspecified but stable order.
    pub fn iter(&self) -> impl Iterator<Item = Triple> + '_ {
        self.spo.iter().map(|key| self.materialize(*key))
    }

    fn materialize(&self, [s, p, o]: [TermId; 3]) -> Triple {
        let subject = match &self.terms[s as usize] {
            Term::Iri(iri) => iri.clone(),
            Term::Literal(_) => unreachable!("subjects are always IRIs"),
        };
        let predicate = match &self.terms[p as usize] {
            Term::Iri(iri) => iri.clone(),
            Term::Literal(_) => unreachable!("predicates are always IRIs"),
        };
        Triple::new(subject, predicate, self.terms[o as usize].clone())
    }

    /// Returns all triples matching a pattern (`None` = wildcard), sorted by
    /// their N-Triples rendering.
    pub fn matching(&self, s: Option<&Iri>, p: Option<&Iri>, o: Option<&Term>) -> Vec<Triple> {
        let mut out = self.matching_unsorted(s, p, o);
        out.sort_by_cached_key(render_triple);
        out
    }

    fn matching_unsorted(
        &self,
        s: Option<&Iri>,
        p: Option<&Iri>,
        o: Option<&Term>,
    ) -> Vec<Triple> {
        // Resolve bound terms to ids; a term the graph has never seen cannot
        // match anything.
        let s = match s {
            Some(iri) => match self.id_of(&Term::Iri(iri.clone())) {
                Some(id) => Some(id),
                None => return Vec::new(),
            },
            None => None,
        };
        let p = match p {
            Some(iri) => match self.id_of(&Term::Iri(iri.clone())) {
                Some(id) => Some(id),
                None => return Vec::new(),
            },
            None => None,
        };
        let o = match o {
            Some(term) => match self.id_of(term) {
                Some(id) => Some(id),
                None => return Vec::new(),
            },
            None => None,
        };

        const MAX: TermId = TermId::MAX;
        match (s, p, o) {
            (Some(s), Some(p), Some(o)) => {
                if self.spo.contains(&[s, p, o]) {
                    vec![self.materialize([s, p, o])]
                } else {
                    Vec::new()
                }
            }
            (Some(s), Some(p), None) => self
                .spo
                .range([s, p, 0]..=[s, p, MAX])
                .map(|&k| self.materialize(k))
                .collect(),
            (Some(s), None, None) => self
                .spo
                .range([s, 0, 0]..=[s, MAX, MAX])
                .map(|&k| self.materialize(k))
                .collect(),
            (Some(s), None, Some(o)) => self
                .osp
                .range([o, s, 0]..=[o, s, MAX])
                .map(|&[o, s, p]| self.materialize([s, p, o]))
                .collect(),
            (None, Some(p), Some(o)) => self
                .pos
                .range([p, o, 0]..=[p, o, MAX])
                .map(|&[p, o, s]| self.materialize([s, p, o]))
                .collect(),
            (None, Some(p), None) => self
                .pos
                .range([p, 0, 0]..=[p, MAX, MAX])
                .map(|&[p, o, s]| self.materialize([s, p, o]))
                .collect(),
            (None, None, Some(o)) => self
                .osp
                .range([o, 0, 0]..=[o, MAX, MAX])
                .map(|&[o, s, p]| self.materialize([s, p, o]))
                .collect(),
            (None, None, None) => self.iter().collect(),
        }
    }

    /// All triples sorted by their N-Triples rendering.
    pub fn to_sorted_triples(&self) -> Vec<Triple> {
        self.matching(None, None, None)
    }

    /// True when `term` occurs as a subject or object of some triple.
    pub fn is_node(&self, term: &Term) -> bool {
        let Some(id) = self.id_of(term) else {
            return false;
        };
        const MAX: TermId = TermId::MAX;
        self.osp.range([id, 0, 0]..=[id, MAX, MAX]).next().is_some()
            || matches!(term, Term::Iri(_))
                && self.spo.range([id, 0, 0]..=[id, MAX, MAX]).next().is_some()
    }

    /// Diagnostic: true when the three indexes describe the same triple set.
    #[doc(hidden)]
    pub fn indexes_consistent(&self) -> bool {
        if self.pos.len() != self.spo.len() || self.osp.len() != self.spo.len() {
            return false;
        }
        let from_pos: BTreeSet<[TermId; 3]> =
            self.pos.iter().map(|&[p, o, s]| [s, p, o]).collect();
        let from_osp: BTreeSet<[TermId; 3]> =
            self.osp.iter().map(|&[o, s, p]| [s, p, o]).collect();
        from_pos == self.spo && from_osp == self.spo
    }
}

/// Graphs are equal as triple sets, regardless of interning order.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.iter().all(|t| other.contains(&t))
    }
}

impl Eq for Graph {}

impl FromIterator<Triple> for Graph {
    fn from_iter<I: IntoIterator<Item = Triple>>(iter: I) -> Self {
        let mut graph = Graph::new();
        for triple in iter {
            graph.insert(triple);
        }
        graph
    }
}

impl Extend<Triple> for Graph {
    fn extend<I: IntoIterator<Item = Triple>>(&mut self, iter: I) {
        for triple in iter {
            self.insert(triple);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::Literal;

    fn iri(text: &str) -> Iri {
        Iri::new(text).unwrap()
    }

    fn sample() -> Graph {
        let mut g = Graph::new();
        let a = iri("http://x/a");
        let b = iri("http://x/b");
        let p = iri("http://x/p");
        let q = iri("http://x/q");
        g.insert(Triple::new(a.clone(), p.clone(), b.clone()));
        g.insert(Triple::new(a.clone(), q.clone(), Literal::string("v")));
        g.insert(Triple::new(b.clone(), p.clone(), Literal::string("v")));
        g
    }

    #[test]
    fn insert_deduplicates() {
        let mut g = Graph::new();
        let t = Triple::new(iri("http://x/a"), iri("http://x/p"), iri("http://x/b"));
        assert!(g.insert(t.clone()));
        assert!(!g.insert(t.clone()));
        assert_eq!(g.len(), 1);
        assert!(g.contains(&t));
        assert!(g.indexes_consistent());
    }

    #[test]
    fn matching_covers_every_bound_combination() {
        let g = sample();
        let a = iri("http://x/a");
        let p = iri("http://x/p");
        let v: Term = Literal::string("v").into();

        assert_eq!(g.matching(None, None, None).len(), 3);
        assert_eq!(g.matching(Some(&a), None, None).len(), 2);
        assert_eq!(g.matching(None, Some(&p), None).len(), 2);
        assert_eq!(g.matching(None, None, Some(&v)).len(), 2);
        assert_eq!(g.matching(Some(&a), Some(&p), None).len(), 1);
        assert_eq!(g.matching(Some(&a), None, Some(&v)).len(), 1);
        assert_eq!(g.matching(None, Some(&p), Some(&v)).len(), 1);
        assert_eq!(g.matching(Some(&a), Some(&p), Some(&v)).len(), 0);

        // Unknown terms match nothing.
        assert!(g.matching(Some(&iri("http://x/zz")), None, None).is_empty());
    }

    #[test]
    fn matching_results_are_render_sorted() {
        let g = sample();
        let all = g.matching(None, None, None);
        let mut rendered: Vec<String> = all.iter().map(render_triple).collect();
        let sorted = {
            let mut s = rendered.clone();
            s.sort();
            s
        };
        assert_eq!(rendered, sorted);
        rendered.dedup();
        assert_eq!(rendered.len(), all.len());
    }

    #[test]
    fn equality_ignores_insertion_order() {
        let g = sample();
        let mut h = Graph::new();
        let mut triples = g.to_sorted_triples();
        triples.reverse();
        for t in triples {
            h.insert(t);
        }
        assert_eq!(g, h);

        h.insert(Triple::new(iri("http://x/n"), iri("http://x/p"), iri("http://x/a")));
        assert_ne!(g, h);
    }

    #[test]
    fn merge_counts_new_triples() {
        let mut g = sample();
        let h = sample();
        assert_eq!(g.merge(&h), 0);
        let mut extra = Graph::new();
        extra.insert(Triple::new(iri("http://x/n"), iri("http://x/p"), iri("http://x/a")));
        extra.extend(h.iter());
        assert_eq!(g.merge(&extra), 1);
        assert_eq!(g.len(), 4);
    }

    #[test]
    fn is_node_sees_subjects_and_objects_but_not_predicates() {
        let g = sample();
        assert!(g.is_node(&Term::Iri(iri("http://x/a"))));
        assert!(g.is_node(&Term::Iri(iri("http://x/b"))));
        assert!(g.is_node(&Literal::string("v").into()));
        assert!(!g.is_node(&Term::Iri(iri("http://x/p"))));
        assert!(!g.is_node(&Literal::string("missing").into()));
    }
}
