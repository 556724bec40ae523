#pragma once

#include "brst/hpt.hpp"
#include "brst/probes.hpp"

namespace brst {

// A finite filtered complex with a contraction satisfying all side
// conditions, plus one admissible perturbation for each lemma.
// Basis vectors carry a cohomological degree and a filtration level; every
// structure map preserves the level, and each perturbation raises it.
struct RandomContractionCase {
    Contraction<Vector> contraction;
    // Perturbation keeping p (t_X p = p t_Y).
    LinearOp<Vector> tY_v1, tX_v1;
    // Perturbation keeping i (t_Y i = i t_X).
    LinearOp<Vector> tY_v2, tX_v2;
    ProbeSet<Vector> probes;
    std::size_t dim_x = 0;
    std::size_t dim_y = 0;
};

RandomContractionCase random_filtered_contraction(ProbeGenerator& gen, std::size_t probe_count = 20);

} // namespace brst
