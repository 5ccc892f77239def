//! Incidence hypotheses: how many points of a configuration lie on lines,
//! linear subspaces and plane curves of low degree.

mod curves;
mod flats;
mod hypotheses;

pub use curves::{
    max_on_line, max_on_plane_curve, plane_curve_exceeding, property_star, star_degree_cap, CurveIncidenceRecord,
    IncidenceCurve, SearchOptions, StarReport,
};
pub use hypotheses::{
    davis_geramita_hypothesis, davis_geramita_parameters, eisenbud_koh_hypothesis, CurveBoundCheck,
    DavisGeramitaReport, EisenbudKohReport, SubspaceWitness,
};
