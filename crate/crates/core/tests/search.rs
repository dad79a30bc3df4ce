use nicerat::families::{search, search_with, FamilyId, Requirement, SearchOptions};

const THREE_INFLEXION_ROWS: [[i64; 3]; 6] =
    [[49, -4, 196], [169, -1, 169], [196, 32, 931], [343, 17, 343], [539, -19, 637], [560, 10, 133]];

fn rows(hits: &[nicerat::families::FamilyParams]) -> Vec<[i64; 3]> {
    hits.iter().map(|p| [p.values[0], p.values[1], p.values[2]]).collect()
}

#[test]
fn numint_three_inflexions_bound_600() {
    let hits = search(FamilyId::R22NumInt, 600, &[Requirement::Inflexion { count: 3, integer: false }]).unwrap();
    let found = rows(&hits);
    for row in THREE_INFLEXION_ROWS {
        // d = 931 lies outside a box of half-width 600
        assert_eq!(found.contains(&row), row[2] <= 600, "{row:?}");
    }
}

#[test]
fn numint_three_inflexions_bound_1000_parallel() {
    let opts = SearchOptions {
        bound: 1000,
        requirements: vec![Requirement::Inflexion { count: 3, integer: false }],
        jobs: 4,
    };
    let found = rows(&search_with(FamilyId::R22NumInt, &opts).unwrap());
    for row in THREE_INFLEXION_ROWS {
        assert!(found.contains(&row), "{row:?}");
    }
}

#[test]
fn r31_three_rational_critical() {
    let hits = search(FamilyId::R31Int, 30, &[Requirement::Critical { count: 3, integer: false }]).unwrap();
    assert!(hits.iter().any(|p| p.values == vec![10, 15, 24]));
}
