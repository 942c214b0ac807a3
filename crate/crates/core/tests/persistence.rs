//! Export and cache round trips.

use kr_crystals::cache;
use kr_crystals::cartan::{AffineFamily, AffineType};
use kr_crystals::classical::Tableau;
use kr_crystals::crystal::Crystal;
use kr_crystals::export::{tableau_key, GraphExport};
use kr_crystals::kr::KrCrystal;

fn export(k: &KrCrystal) -> GraphExport {
    let keys = k.vertices.iter().map(tableau_key).collect();
    GraphExport::new(&format!("{} B^{{{},{}}}", k.aff, k.r, k.s), k, keys, Some(k.sigma().unwrap()))
}

#[test]
fn canonical_keys_are_fixed_width() {
    assert_eq!(tableau_key(&Tableau::empty()), ":");
    assert_eq!(tableau_key(&Tableau::from_rows(&[vec![1, 2], vec![-3]])), "2,1:+01+02-03");
}

#[test]
fn export_lists_zero_edges_and_sigma() {
    let k = KrCrystal::new(&AffineType::new(AffineFamily::D1, 5), 2, 2).unwrap();
    let g = export(&k);
    assert_eq!(g.colors, (0..=5).collect::<Vec<_>>());
    assert!(g.edges.iter().any(|e| e.color == 0));
    let comps: Vec<Vec<i32>> = vec![vec![0; 5], vec![1, 1, 0, 0, 0], vec![2, 2, 0, 0, 0]];
    assert_eq!(g.components, comps);
    let sigma = g.sigma.as_ref().unwrap();
    assert!((0..sigma.len()).all(|b| sigma[sigma[b]] == b));
    let json = g.to_json();
    let back: GraphExport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, g);
    assert_eq!(export(&k).to_json(), json, "export is deterministic");
    let dot = g.to_dot();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), g.edges.len() + sigma.iter().enumerate().filter(|&(a, &b)| a < b).count());
}

#[test]
fn cache_round_trip_reproduces_the_graph() {
    let dir = tempfile::tempdir().unwrap();
    for (fam, n, r, s) in [(AffineFamily::D1, 5, 2, 2), (AffineFamily::C1, 4, 1, 3), (AffineFamily::D2, 4, 2, 1), (AffineFamily::A1, 4, 2, 2)] {
        let aff = AffineType::new(fam, n);
        assert!(cache::load(dir.path(), &aff, r, s).unwrap().is_none());
        let k = KrCrystal::new(&aff, r, s).unwrap();
        let path = cache::save(dir.path(), &k).unwrap();
        assert!(path.ends_with(format!("{:?}_{}/{}x{}.krz", fam, n, r, s)));
        let back = cache::load(dir.path(), &aff, r, s).unwrap().unwrap();
        assert_eq!(back.vertices, k.vertices);
        for i in k.colors() {
            for b in 0..k.len() {
                assert_eq!(back.f(i, b), k.f(i, b));
                assert_eq!(back.e(i, b), k.e(i, b));
                assert_eq!(back.eps(i, b), k.eps(i, b));
            }
        }
        let again = cache::load_or_generate(dir.path(), &aff, r, s, 1000).unwrap();
        assert_eq!(again.vertices, k.vertices);
    }
}

#[test]
fn stale_cache_entries_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let aff = AffineType::new(AffineFamily::D1, 5);
    let k = KrCrystal::new(&aff, 1, 1).unwrap();
    let path = cache::save(dir.path(), &k).unwrap();
    let text = std::fs::read_to_string(&path).unwrap().replace(cache::CACHE_VERSION, "old");
    std::fs::write(&path, text).unwrap();
    assert!(matches!(cache::load(dir.path(), &aff, 1, 1), Err(cache::CacheError::Stale(_))));
    assert_eq!(cache::load_or_generate(dir.path(), &aff, 1, 1, 1000).unwrap().vertices, k.vertices);
    assert!(cache::load(dir.path(), &aff, 1, 1).unwrap().is_some());
}

#[test]
fn corrupted_cache_entries_are_errors() {
    let dir = tempfile::tempdir().unwrap();
    let aff = AffineType::new(AffineFamily::C1, 4);
    let k = KrCrystal::new(&aff, 1, 1).unwrap();
    let path = cache::save(dir.path(), &k).unwrap();
    let mut entry: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let f0 = entry["f0"].as_array_mut().unwrap();
    let n = f0.len();
    for x in f0.iter_mut() {
        *x = serde_json::json!(0);
    }
    f0[0] = serde_json::json!(n as u64 + 5);
    std::fs::write(&path, entry.to_string()).unwrap();
    assert!(matches!(cache::load(dir.path(), &aff, 1, 1), Err(cache::CacheError::Stale(_))));
    std::fs::write(&path, "not json").unwrap();
    assert!(matches!(cache::load(dir.path(), &aff, 1, 1), Err(cache::CacheError::Format(_))));
}
