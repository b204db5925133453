//! Built-in matroids addressable as `corpus:NAME`.

use osalg::matroid::{cone, direct_sum, parallel_connection, Matroid, PointedMatroid};
use osalg::subsets::subsets_of_size;
use osalg::{Error, Result};

pub struct CorpusEntry {
    pub name: &'static str,
    pub note: &'static str,
    pub matroid: Matroid,
    pub base: Option<usize>,
}

fn uniform(r: usize, n: usize) -> Matroid {
    Matroid::from_circuits(n, subsets_of_size(n, r + 1), Some(r)).expect("valid uniform matroid")
}

fn boolean(n: usize) -> Matroid {
    Matroid::from_circuits(n, Vec::new(), Some(n)).expect("valid free matroid")
}

fn k4() -> Matroid {
    // Edges of K4 in lexicographic vertex-pair order:
    // 0=12, 1=13, 2=14, 3=23, 4=24, 5=34.  Lines = four triangles.
    Matroid::from_rank3_lines(6, vec![0b001011, 0b010101, 0b100110, 0b111000])
        .expect("valid graphic matroid")
}

fn yuzvinsky8() -> Matroid {
    // Eight points with the five lines 123, 3456, 167, 258, 478
    // (1-based labels), shifted to 0-based masks.
    Matroid::from_rank3_lines(
        8,
        vec![0b00000111, 0b00111100, 0b01100001, 0b10010010, 0b11001000],
    )
    .expect("valid line presentation")
}

fn pointed(m: Matroid, base: usize) -> PointedMatroid {
    PointedMatroid::new(m, base).expect("base point in range")
}

/// `{0} ⊕ P(G₀, G₁)`: a single free point next to the parallel connection.
fn point_plus_parallel(g0: &Matroid, g1: &Matroid) -> Matroid {
    let p = parallel_connection(&pointed(g0.clone(), 0), &pointed(g1.clone(), 0))
        .expect("parallel connection of simple matroids");
    direct_sum(&boolean(1), p.matroid()).expect("direct sum")
}

fn entry(
    name: &'static str,
    note: &'static str,
    matroid: Matroid,
    base: Option<usize>,
) -> CorpusEntry {
    CorpusEntry {
        name,
        note,
        matroid,
        base,
    }
}

pub fn corpus() -> Vec<CorpusEntry> {
    let u23 = uniform(2, 3);
    let u24 = uniform(2, 4);
    let cone_u23 = cone(&u23).expect("cone");
    let cone_u24 = cone(&u24).expect("cone");
    let cone_k4 = cone(&k4()).expect("cone");
    vec![
        entry("u23", "three-point line U_{2,3}", u23.clone(), None),
        entry("u24", "four-point line U_{2,4}", u24.clone(), None),
        entry("u34", "uniform matroid U_{3,4}", uniform(3, 4), None),
        entry("boolean1", "free matroid on 1 point", boolean(1), None),
        entry("boolean2", "free matroid on 2 points", boolean(2), None),
        entry("boolean3", "free matroid on 3 points", boolean(3), None),
        entry("boolean4", "free matroid on 4 points", boolean(4), None),
        entry("k4", "cycle matroid of the complete graph K4", k4(), None),
        entry(
            "yuzvinsky8",
            "8-point rank-3 matroid with lines 123, 3456, 167, 258, 478 (1-based)",
            yuzvinsky8(),
            None,
        ),
        entry(
            "cone_u23",
            "U_{2,3} with a free base point adjoined (point 0)",
            cone_u23.matroid().clone(),
            Some(cone_u23.base()),
        ),
        entry(
            "cone_u24",
            "U_{2,4} with a free base point adjoined (point 0)",
            cone_u24.matroid().clone(),
            Some(cone_u24.base()),
        ),
        entry(
            "cone_k4",
            "M(K4) with a free base point adjoined (point 0)",
            cone_k4.matroid().clone(),
            Some(cone_k4.base()),
        ),
        entry(
            "dsum_u23_u23",
            "direct sum of two copies of U_{2,3}",
            direct_sum(&u23, &u23).expect("direct sum"),
            None,
        ),
        entry(
            "dsum_u23_u24",
            "direct sum of U_{2,3} and U_{2,4}",
            direct_sum(&u23, &u24).expect("direct sum"),
            None,
        ),
        entry(
            "dsum_u23_k4",
            "direct sum of U_{2,3} and M(K4)",
            direct_sum(&u23, &k4()).expect("direct sum"),
            None,
        ),
        entry(
            "pcsum_u23_u23",
            "free point plus the parallel connection of two copies of U_{2,3} at point 0",
            point_plus_parallel(&u23, &u23),
            None,
        ),
        entry(
            "pcsum_u23_u24",
            "free point plus the parallel connection of U_{2,3} and U_{2,4} at point 0",
            point_plus_parallel(&u23, &u24),
            None,
        ),
        entry(
            "pcsum_u23_k4",
            "free point plus the parallel connection of U_{2,3} and M(K4) at point 0",
            point_plus_parallel(&u23, &k4()),
            None,
        ),
        entry(
            "pconn_u23_u23",
            "parallel connection of two copies of U_{2,3}, glued point 0 as base",
            {
                let p = parallel_connection(&pointed(u23.clone(), 0), &pointed(u23, 0))
                    .expect("parallel connection");
                p.matroid().clone()
            },
            Some(0),
        ),
    ]
}

pub fn lookup(name: &str) -> Result<CorpusEntry> {
    corpus()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| {
            let names: Vec<&str> = corpus().iter().map(|e| e.name).collect();
            Error::Parse(format!(
                "unknown corpus entry {name:?}; available: {}",
                names.join(", ")
            ))
        })
}
