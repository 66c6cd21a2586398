use std::fs;
use std::path::Path;

use parbelos_core::euclid::intersect;
use parbelos_core::{ParbelosInputs, Point, Side};
use parbelos_frontend::cli::ParbelosRun;
use parbelos_frontend::{render_svg, Element, RenderOptions, Scene};

fn canonical() -> ParbelosRun {
    let inputs =
        ParbelosInputs::new(Point::from_ints(0, 0), Point::from_ints(1, 0), Point::from_ints(4, 0), Side::Left);
    ParbelosRun::new(&inputs).unwrap()
}

#[test]
fn matches_golden_file() {
    let golden =
        fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/parbelos_canonical.svg")).unwrap();
    let svg = canonical().to_svg(&RenderOptions::default()).unwrap();
    assert_eq!(svg, golden);
}

#[test]
fn arc_controls_are_exact_tangent_intersections() {
    let run = canonical();
    let scene = Scene::parbelos(&run.figure).unwrap();
    let arcs: Vec<_> = scene.arcs().collect();
    assert_eq!(arcs.len(), 3);
    for arc in &arcs {
        assert_eq!(arc.control(), &intersect(arc.start_tangent(), arc.end_tangent()).unwrap());
    }
    assert_eq!(arcs[2].control(), &run.figure.t2);
    assert_eq!(arcs[0].control(), &run.figure.t1);
    assert_eq!(arcs[1].control(), &run.figure.t3);
}

#[test]
fn figure_element_counts() {
    let scene = Scene::parbelos(&canonical().figure).unwrap();
    let labels = scene.elements.iter().filter(|e| matches!(e, Element::Point { .. })).count();
    let circles = scene.elements.iter().filter(|e| matches!(e, Element::Circle(_))).count();
    assert_eq!((labels, circles), (12, 1));
}

#[test]
fn precision_option_controls_digits() {
    let scene = Scene::parbelos(&canonical().figure).unwrap();
    let coarse = render_svg(&scene, &RenderOptions { decimal_digits: 3, ..RenderOptions::default() }).unwrap();
    assert!(coarse.contains(r#"r="201.246""#), "{coarse}");
    let fine = render_svg(&scene, &RenderOptions::default()).unwrap();
    assert!(fine.contains(r#"r="201.246117974981""#));
}
