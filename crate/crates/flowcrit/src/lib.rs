//! Exact algorithms for group-valued flows on small multigraphs: existence
//! and counting of nowhere-zero flows with prescribed boundaries, flow
//! criticality, sparse extremal constructions, Euler genus, and density
//! censuses. All arithmetic is exact; nothing here floats.

pub mod census;
pub mod critical;
pub mod density;
pub mod families;
pub mod flow;
pub mod graph;
pub mod group;
pub mod topology;

pub use census::{
    census_csv, census_json, enumerate_connected_graphs, run_census, BoundaryMode, CensusError,
    CensusJob, CensusOutcome, CensusRecord, CensusSource, CensusSummary, BOUNDARY_MODE_CAP,
    GENERATOR_CAP,
};
pub use critical::{
    critical_boundaries, find_flow_critical_contraction, is_flow_critical, CriticalityError,
    CriticalityMode, CriticalityVerdict,
};
pub use density::{
    check_bounds, density_functionals, is_sparse, partition_weight, BoundCheck, BoundStatus,
    BoundsReport, DensityError, DensityReport,
};
pub use families::{
    catalog_json, catalog_sparse6, dual_4ore_catalog, flower_snark, glue, is_exceptional,
    k3n_plus, ore_sum, primal_4ore_catalog, CatalogEntry, FamilyError, PlaneGraph, Provenance,
    CATALOG_CAP,
};
pub use flow::{
    combine_flows, count_nz_flows, count_nz_flows_dc, group_connectivity_witness, has_nz_flow,
    induced_boundary, is_group_connected, transport_flow_from_split,
    transport_flow_to_contraction, validate_boundary, BorderedGraph, Flow, FlowError,
};
pub use graph::{
    CanonicalCertificate, Edge, EdgeCut, EdgeId, GraphError, GraphIoError, Multigraph, Partition,
    VertexId, INFINITE_CONNECTIVITY,
};
pub use group::{Group, GroupElement, GroupError};
pub use topology::{
    check_genus_subadditivity, check_genus_subadditivity_with_budget, euler_genus,
    euler_genus_with_budget, is_planar, plane_embedding, GenusCertificate, GenusError,
    RotationSystem, DEFAULT_GENUS_BUDGET,
};
