#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mukai/catalog.hpp"
#include "mukai/fm_abelian.hpp"
#include "mukai/fm_general.hpp"
#include "mukai/mukai_vector.hpp"

namespace mukai {

// Fixed regression suite over the worked examples: every anchor value the
// toolkit is expected to reproduce, evaluated fresh and compared against the
// frozen expectation.

struct PaperCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool passed = false;
};

struct PaperReport {
    std::vector<PaperCheck> checks;
    bool all_passed = true;
};

// corrupt_check: name of one check whose frozen expectation is deliberately
// perturbed; used to self-test that the harness actually compares values.
inline PaperReport verify_paper(const std::string& corrupt_check = "") {
    struct Item {
        std::string name;
        std::string expected;
        std::function<std::string()> actual;
    };

    const Surface k3_12 = k3_surface(12);
    const Surface ab_4 = abelian_surface(4);

    std::vector<Item> items;
    auto add = [&items](std::string name, std::string expected,
                        std::function<std::string()> actual) {
        items.push_back({std::move(name), std::move(expected), std::move(actual)});
    };

    // -- lattice anchors -----------------------------------------------------
    add("v0_square_zero", "0",
        [&] { return v_squared({2, -1, 3}, k3_12).str(); });
    add("v0_primitive_isotropic", "primitive,isotropic", [&] {
        MukaiVector v0{2, -1, 3};
        return std::string(is_primitive(v0) ? "primitive" : "imprimitive") + "," +
               (is_isotropic(v0, k3_12) ? "isotropic" : "anisotropic");
    });
    add("chern_of_structure_sheaf_k3", "1,0,1",
        [&] { return from_chern(1, 0, 0, k3_12).str(); });
    add("hilb4_vector_from_chern", "1,1,3",
        [&] { return from_chern(1, 1, 4, k3_12).str(); });
    add("degree_hypothesis_example2", "1",
        [&] { return deg_rel({1, 1, 3}, {2, 1, 1}).str(); });

    // -- classical transform -------------------------------------------------
    add("classical_action", "-1,-1,2",
        [&] { return fm_abelian_H({2, 1, -1}, ab_4).str(); });
    add("g_transform_action", "2,1,5",
        [&] { return g_transform_H({5, 1, 2}, ab_4).str(); });
    add("classify_it0", "IT0_F:2,-1,1", [&] {
        Section2Verdict v = classify_section2({1, 1, 2}, ab_4);
        return std::string(to_string(v.kind)) + ":" + v.image->str();
    });
    add("classify_wit2", "WIT2_G:1,1,1", [&] {
        Section2Verdict v = classify_section2({1, 1, 1}, ab_4);
        return std::string(to_string(v.kind)) + ":" + v.image->str();
    });
    add("classify_wit1", "WIT1_F:1,1,-3", [&] {
        Section2Verdict v = classify_section2({3, 1, -1}, ab_4);
        return std::string(to_string(v.kind)) + ":" + v.image->str();
    });

    // -- generalized transform ----------------------------------------------
    add("setup_bezout_example2", "d1=1,l=-2", [&] {
        FmSetup su = make_setup(SurfaceKind::K3, 2, -1, 3);
        return "d1=" + su.d1.str() + ",l=" + su.l.str();
    });
    add("matrix_column_of_w", "2,1,3", [&] {
        return fm_matrix(make_setup(SurfaceKind::K3, 2, -1, 3)).column(2).str();
    });
    add("matrix_det", "1",
        [&] { return fm_matrix(make_setup(SurfaceKind::K3, 2, -1, 3)).det().str(); });
    add("image_of_v0_dual_is_w", "0,0,1", [&] {
        FmSetup su = make_setup(SurfaceKind::K3, 2, -1, 3);
        return fm_apply(su, su.v0_dual()).str();
    });
    add("preimage_of_w", "2,1,3", [&] {
        return fm_inverse_apply(make_setup(SurfaceKind::K3, 2, -1, 3), {0, 0, 1}).str();
    });
    add("deg_identity_example2", "1,1", [&] {
        DegIdentity di = lemma_deg_identity(make_setup(SurfaceKind::K3, 2, -1, 3), {1, 1, 3});
        return di.lhs.str() + "," + di.rhs.str();
    });
    add("deg_identity_r0_3", "1,1", [&] {
        DegIdentity di = lemma_deg_identity(make_setup(SurfaceKind::Abelian, 3, -2, 1), {1, 1, 2});
        return di.lhs.str() + "," + di.rhs.str();
    });

    // -- the K3 walk ----------------------------------------------------------
    add("theorem_map_example2", "FM:3,-1,1", [&] {
        TheoremVerdict t = theorem_map(make_setup(SurfaceKind::K3, 2, -1, 3), {1, 1, 3});
        return std::string(to_string(t.kind)) + ":" + t.canonical_image->str();
    });
    add("reflection_step", "-1,-1,-3",
        [&] { return reflection({3, -1, 1}, {1, 0, 1}, k3_12).str(); });
    add("reflection_canonical", "1,1,3",
        [&] { return canonical_form({-1, -1, -3}, k3_12).vec.str(); });
    add("hilbert_index_both_ends", "4,4", [&] {
        return hilbert_index({1, 1, 3}, k3_12)->str() + "," +
               hilbert_index({1, 1, 3}, k3_12)->str();
    });
    add("moduli_dim_both_ends", "8,8", [&] {
        return moduli_dim({1, 1, 3}, k3_12).str() + "," + moduli_dim({1, 1, 3}, k3_12).str();
    });

    // -- the rank-1-degree family ---------------------------------------------
    add("example1_r0_2", "v=1,1,1;v0=2,-1,1;l_sq=4;v_sq=2;p=1", [&] {
        Example1Case c = example1_family(SurfaceKind::Abelian, 2, 1, 1);
        return "v=" + c.v.str() + ";v0=" + c.setup.v0().str() + ";l_sq=" + c.setup.l_sq().str() +
               ";v_sq=" + c.v_sq.str() + ";p=" + c.p.str();
    });
    add("example1_r0_3", "v=1,1,2;v0=3,-2,4;l_sq=6;v_sq=2;p=2", [&] {
        Example1Case c = example1_family(SurfaceKind::Abelian, 3, 2, 1);
        return "v=" + c.v.str() + ";v0=" + c.setup.v0().str() + ";l_sq=" + c.setup.l_sq().str() +
               ";v_sq=" + c.v_sq.str() + ";p=" + c.p.str();
    });
    add("example1_sweep_small", "all-FM", [&] {
        for (Int r0 = 2; r0 <= 4; ++r0)
            for (Int s = 1; s <= 3; ++s)
                for (Int n = 1; n < s * r0; ++n) {
                    if (gcd_int(r0, n) != 1) continue;
                    Example1Case c = example1_family(SurfaceKind::Abelian, r0, n, s);
                    if (c.verdict.kind != TheoremCase::FM || c.v_sq != 2 * s || c.p != n)
                        return std::string("failed at r0=") + r0.str() + ",n=" + n.str() +
                               ",s=" + s.str();
                }
        return std::string("all-FM");
    });
    add("example2_trace_replay", "8 steps, hilb 4 -> 4", [&] {
        Example2Trace tr = example2_k3();
        if (tr.steps.size() != 8) return std::string("unexpected step count");
        return std::to_string(tr.steps.size()) + " steps, hilb " + tr.steps[4].output + " -> " +
               tr.steps[5].output;
    });

    if (!corrupt_check.empty()) {
        bool known = false;
        for (const Item& item : items) known = known || item.name == corrupt_check;
        if (!known)
            throw std::invalid_argument("verify_paper: no check named '" + corrupt_check + "'");
    }

    PaperReport report;
    for (const Item& item : items) {
        PaperCheck check;
        check.name = item.name;
        check.expected = item.expected;
        if (check.name == corrupt_check) check.expected += "0";  // deliberate mismatch
        try {
            check.actual = item.actual();
        } catch (const std::exception& e) {
            check.actual = std::string("exception: ") + e.what();
        }
        check.passed = check.actual == check.expected;
        report.all_passed = report.all_passed && check.passed;
        report.checks.push_back(std::move(check));
    }
    return report;
}

}  // namespace mukai
