//! Checks the query engine against a brute-force reference implementation
//! on randomized graphs and queries.
//!
//! The reference ignores the triple indexes and the join planner entirely:
//! it scans every triple for every pattern in textual order and extends
//! bindings naively, then applies the same filter/projection/order/limit
//! semantics. Agreement over random inputs pins the engine's behavior.

use std::collections::{BTreeMap, BTreeSet};

use cloudkg::query::{evaluate, Filter, FilterOp, PatternTerm, Projection, Query, TriplePattern};
use cloudkg::rdf::render_term;
use cloudkg::{Graph, Iri, Literal, Term, Triple};
use proptest::prelude::*;

type Bindings = BTreeMap<String, Term>;

fn oracle(query: &Query, graph: &Graph) -> (Vec<String>, Vec<Vec<Term>>) {
    let mut solutions: Vec<Bindings> = vec![Bindings::new()];
    for pattern in &query.patterns {
        let mut next = Vec::new();
        for solution in &solutions {
            for triple in graph.iter() {
                let candidates = [
                    (&pattern.subject, Term::Iri(triple.subject.clone())),
                    (&pattern.predicate, Term::Iri(triple.predicate.clone())),
                    (&pattern.object, triple.object.clone()),
                ];
                let mut extended = solution.clone();
                let mut ok = true;
                for (position, value) in candidates {
                    match position {
                        PatternTerm::Constant(constant) => {
                            if *constant != value {
                                ok = false;
                                break;
                            }
                        }
                        PatternTerm::Var(name) => match extended.get(name) {
                            Some(bound) if *bound != value => {
                                ok = false;
                                break;
                            }
                            Some(_) => {}
                            None => {
                                extended.insert(name.clone(), value);
                            }
                        },
                    }
                }
                if ok {
                    next.push(extended);
                }
            }
        }
        solutions = next;
    }

    solutions.retain(|solution| {
        query.filters.iter().all(|filter| {
            let term = &solution[&filter.var];
            match &filter.op {
                FilterOp::Eq(constant) => term == constant,
                FilterOp::Ne(constant) => term != constant,
                FilterOp::Contains(needle) => term.string_value().contains(needle.as_str()),
            }
        })
    });

    let header = match &query.projection {
        Projection::All => query.pattern_variables(),
        Projection::Vars(vars) => vars.clone(),
    };
    let mut keyed: BTreeMap<Vec<String>, Option<String>> = BTreeMap::new();
    let mut terms_by_render: BTreeMap<Vec<String>, Vec<Term>> = BTreeMap::new();
    for solution in &solutions {
        let row: Vec<Term> = header.iter().map(|v| solution[v].clone()).collect();
        let rendered: Vec<String> = row.iter().map(render_term).collect();
        let key = query.order_by.as_ref().map(|v| render_term(&solution[v]));
        let slot = keyed.entry(rendered.clone()).or_insert_with(|| key.clone());
        if key < *slot {
            *slot = key;
        }
        terms_by_render.insert(rendered, row);
    }
    let mut rows: Vec<(Option<String>, Vec<String>)> =
        keyed.into_iter().map(|(rendered, key)| (key, rendered)).collect();
    rows.sort();
    let mut out: Vec<Vec<Term>> = rows
        .into_iter()
        .map(|(_, rendered)| terms_by_render[&rendered].clone())
        .collect();
    if let Some(limit) = query.limit {
        out.truncate(limit);
    }
    (header, out)
}

/// Small pools keep the chance of join hits high.
fn pool_iri(i: u8) -> Iri {
    Iri::new(format!("http://ex/n{}", i % 12)).unwrap()
}

fn pool_term(i: u8) -> Term {
    if i % 4 == 3 {
        Term::Literal(Literal::string(format!("v{}", i % 6)))
    } else {
        Term::Iri(pool_iri(i))
    }
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    prop::collection::vec((any::<u8>(), 0u8..4, any::<u8>()), 0..80).prop_map(|entries| {
        entries
            .into_iter()
            .map(|(s, p, o)| {
                Triple::new(
                    pool_iri(s),
                    Iri::new(format!("http://ex/p{p}")).unwrap(),
                    pool_term(o),
                )
            })
            .collect()
    })
}

const VARS: [&str; 4] = ["a", "b", "c", "d"];

fn arb_pattern_term() -> impl Strategy<Value = PatternTerm> {
    prop_oneof![
        3 => (0usize..VARS.len()).prop_map(|i| PatternTerm::Var(VARS[i].to_owned())),
        1 => any::<u8>().prop_map(|i| PatternTerm::Constant(Term::Iri(pool_iri(i)))),
    ]
}

fn arb_predicate_term() -> impl Strategy<Value = PatternTerm> {
    prop_oneof![
        1 => (0usize..VARS.len()).prop_map(|i| PatternTerm::Var(VARS[i].to_owned())),
        3 => (0u8..4).prop_map(|p| {
            PatternTerm::Constant(Term::Iri(Iri::new(format!("http://ex/p{p}")).unwrap()))
        }),
    ]
}

fn arb_object_term() -> impl Strategy<Value = PatternTerm> {
    prop_oneof![
        3 => (0usize..VARS.len()).prop_map(|i| PatternTerm::Var(VARS[i].to_owned())),
        1 => any::<u8>().prop_map(|i| PatternTerm::Constant(pool_term(i))),
    ]
}

fn arb_query() -> impl Strategy<Value = Query> {
    let patterns = prop::collection::vec(
        (arb_pattern_term(), arb_predicate_term(), arb_object_term()).prop_map(
            |(subject, predicate, object)| TriplePattern {
                subject,
                predicate,
                object,
            },
        ),
        1..=3,
    );
    let filters = prop::collection::vec(
        (0usize..VARS.len(), 0u8..3, any::<u8>()).prop_map(|(v, op, seed)| Filter {
            var: VARS[v].to_owned(),
            op: match op {
                0 => FilterOp::Eq(pool_term(seed)),
                1 => FilterOp::Ne(pool_term(seed)),
                _ => FilterOp::Contains(format!("n{}", seed % 12)),
            },
        }),
        0..2,
    );
    (
        patterns,
        filters,
        prop::option::of(0usize..VARS.len()),
        prop::option::of(0usize..VARS.len()),
        prop::option::of(0usize..6),
    )
        .prop_map(|(patterns, filters, select, order, limit)| {
            let used: Vec<String> = {
                let mut seen = BTreeSet::new();
                patterns
                    .iter()
                    .flat_map(|p| p.positions().into_iter())
                    .filter_map(PatternTerm::as_var)
                    .filter(|v| seen.insert(v.to_string()))
                    .map(str::to_owned)
                    .collect()
            };
            // Restrict referenced variables to ones the patterns bind, as
            // the parser would.
            let projection = match (select, used.is_empty()) {
                (None, _) | (_, true) => Projection::All,
                (Some(i), false) => Projection::Vars(vec![used[i % used.len()].clone()]),
            };
            let filters = filters
                .into_iter()
                .filter(|f| used.contains(&f.var))
                .collect();
            let order_by = match (order, used.is_empty()) {
                (Some(i), false) => Some(used[i % used.len()].clone()),
                _ => None,
            };
            Query {
                prefixes: BTreeMap::new(),
                projection,
                patterns,
                filters,
                order_by,
                limit,
            }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    #[test]
    fn engine_matches_brute_force(graph in arb_graph(), query in arb_query()) {
        let table = evaluate(&query, &graph);
        let (header, rows) = oracle(&query, &graph);
        prop_assert_eq!(table.header, header);
        prop_assert_eq!(table.rows, rows);
    }

    #[test]
    fn result_ignores_pattern_order(graph in arb_graph(), query in arb_query()) {
        prop_assume!(query.patterns.len() >= 2);
        let mut reversed = query.clone();
        reversed.patterns.reverse();
        if let Projection::All = query.projection {
            // Reversal may reorder the SELECT * header; compare through an
            // explicit projection instead.
            let vars = query.pattern_variables();
            reversed.projection = Projection::Vars(vars.clone());
            let mut forward = query.clone();
            forward.projection = Projection::Vars(vars);
            prop_assert_eq!(evaluate(&forward, &graph), evaluate(&reversed, &graph));
        } else {
            prop_assert_eq!(evaluate(&query, &graph), evaluate(&reversed, &graph));
        }
    }
}
