// Acceptance suite: one binary, one pass/fail line per criterion.
// Usage: acceptance <path-to-mukai-cli>
// Exit code = number of failed criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "mukai/mukai.hpp"

using namespace mukai;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Criterion {
    std::string name;
    std::vector<std::string> problems;
    Clock::time_point start = Clock::now();
    double limit_seconds;

    Criterion(std::string name_, double limit_seconds_ = 0.0)
        : name(std::move(name_)), limit_seconds(limit_seconds_) {}

    void require(bool ok, const std::string& what) {
        if (!ok && problems.size() < 5) problems.push_back(what);
        if (!ok && problems.size() >= 5) problems.back() = "... more failures suppressed";
    }

    void finish() {
        double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        if (limit_seconds > 0 && elapsed > limit_seconds)
            problems.push_back("runtime " + std::to_string(elapsed) + "s exceeds " +
                               std::to_string(limit_seconds) + "s");
        char timing[32];
        std::snprintf(timing, sizeof(timing), "%.2fs", elapsed);
        if (problems.empty()) {
            std::cout << "PASS " << name << " (" << timing << ")\n";
        } else {
            ++g_failures;
            std::cout << "FAIL " << name << " (" << timing << ")\n";
            for (const std::string& p : problems) std::cout << "     " << p << "\n";
        }
    }
};

std::mt19937_64 rng(20260811ULL);

Int rand_int(long long lo, long long hi) {
    return Int(std::uniform_int_distribution<long long>(lo, hi)(rng));
}

MukaiVector rand_vector(long long bound) {
    return {rand_int(-bound, bound), rand_int(-bound, bound), rand_int(-bound, bound)};
}

FmSetup rand_setup(long long bound) {
    for (;;) {
        Int r0 = rand_int(1, bound), d0 = rand_int(-bound, bound), k = rand_int(1, bound);
        if (gcd_int(r0, k) != 1 || gcd_int(r0, d0) != 1) continue;
        SurfaceKind kind = rand_int(0, 1) == 0 ? SurfaceKind::Abelian : SurfaceKind::K3;
        return make_setup(kind, r0, d0, k);
    }
}

// criterion 1: the full K3 walk, exact values end to end
void criterion_example2() {
    Criterion c("criterion-1 example2-end-to-end", 1.0);
    FmSetup su = make_setup(SurfaceKind::K3, 2, -1, 3);
    c.require(su.l_sq() == 12, "l_sq");
    MukaiVector v{1, 1, 3};

    TheoremVerdict t = theorem_map(su, v);
    c.require(t.kind == TheoremCase::FM, "case != FM");
    c.require(t.canonical_image && *t.canonical_image == MukaiVector{3, -1, 1},
              "canonical image != 3,-1,1");

    MukaiVector refl = reflection(*t.canonical_image, {1, 0, 1}, su.target);
    MukaiVector back = canonical_form(refl, su.target).vec;
    c.require(back == MukaiVector{1, 1, 3}, "reflected canonical != 1,1,3, got " + back.str());

    c.require(hilbert_index(v, su.source).value_or(-1) == 4, "source hilbert index != 4");
    c.require(hilbert_index(back, su.target).value_or(-1) == 4, "target hilbert index != 4");
    c.require(moduli_dim(v, su.source) == 8, "source moduli dim != 8");
    c.require(moduli_dim(back, su.target) == 8, "target moduli dim != 8");
    c.finish();
}

// criterion 2: the family sweep r0 in [2,6], s in [1,5], gcd(r0,n)=1
void criterion_example1_sweep() {
    Criterion c("criterion-2 example1-sweep", 1.0);
    int cases = 0;
    for (Int r0 = 2; r0 <= 6; ++r0)
        for (Int s = 1; s <= 5; ++s)
            for (Int n = 1; n < s * r0; ++n) {
                if (gcd_int(r0, n) != 1) continue;
                ++cases;
                std::string tag = " at r0=" + r0.str() + ",n=" + n.str() + ",s=" + s.str();
                try {
                    Example1Case e = example1_family(SurfaceKind::Abelian, r0, n, s);
                    c.require(e.v_sq == 2 * s, "<v^2> != 2s" + tag);
                    c.require(e.p == n, "<v,v0-dual> != n" + tag);
                    c.require(e.verdict.kind == TheoremCase::FM, "case != FM" + tag);
                } catch (const std::exception& e) {
                    c.require(false, std::string(e.what()) + tag);
                }
            }
    c.require(cases >= 150, "unexpectedly small sweep: " + std::to_string(cases));
    c.finish();
}

// criteria 3+4: random-setup isometry sweep and the degree identity
void criterion_isometry_and_degree() {
    Criterion c3("criterion-3 isometry-suite", 10.0);
    Criterion c4("criterion-4 degree-identity", 10.0);
    for (int i = 0; i < 10000; ++i) {
        FmSetup su = rand_setup(20);
        MukaiVector v = rand_vector(1000), w = rand_vector(1000);
        if (pairing(fm_apply(su, v), fm_apply(su, w), su.target) != pairing(v, w, su.source))
            c3.require(false, "pairing not preserved for r0=" + su.r0.str() + ",d0=" +
                                  su.d0.str() + ",k=" + su.k.str() + ",v=" + v.str());
        if (fm_apply(su, su.v0_dual()) != MukaiVector{0, 0, 1})
            c3.require(false, "F(v0-dual) != w at r0=" + su.r0.str());
        if (fm_matrix(su).det() != 1) c3.require(false, "det != 1 at r0=" + su.r0.str());

        DegIdentity di = lemma_deg_identity(su, v);
        if (di.lhs != di.rhs)
            c4.require(false, "deg identity failed for r0=" + su.r0.str() + ",v=" + v.str());
    }
    c3.finish();
    c4.start = c3.start;
    c4.finish();
}

// criterion 5: the (d1, l) ambiguity is exactly a twist
void criterion_normalization() {
    Criterion c("criterion-5 normalization-equivalence", 10.0);
    for (int i = 0; i < 1000; ++i) {
        FmSetup su = rand_setup(20);
        for (int t : {1, -1}) {
            FmSetup shifted =
                make_setup_with_d1(su.source.kind, su.r0, su.d0, su.k, su.d1 + t * su.r0);
            for (int j = 0; j < 10; ++j) {
                MukaiVector v = rand_vector(1000);
                if (twist(fm_apply(shifted, v), -t, su.target) != fm_apply(su, v))
                    c.require(false, "shifted transform is not a twist at r0=" + su.r0.str() +
                                         ",d1'=" + shifted.d1.str());
            }
        }
    }
    c.finish();
}

// criterion 6: degeneration to the classical transform and the classifier
void criterion_degeneration() {
    Criterion c("criterion-6 section2-degeneration", 1.0);
    for (Int k = 1; k <= 20; ++k) {
        IntMatrix3 m = fm_matrix(make_setup(SurfaceKind::Abelian, 1, 0, k));
        bool classical = m.column(0) == MukaiVector{0, 0, 1} &&
                         m.column(1) == MukaiVector{0, -1, 0} &&
                         m.column(2) == MukaiVector{1, 0, 0};
        c.require(classical, "matrix not classical at k=" + k.str());
    }
    Surface ab4 = abelian_surface(4);
    auto img = [&ab4](const MukaiVector& v) { return *classify_section2(v, ab4).image; };
    c.require(img({1, 1, 2}) == MukaiVector{2, -1, 1}, "IT0 image");
    c.require(img({1, 1, 1}) == MukaiVector{1, 1, 1}, "WIT2 image");
    c.require(img({3, 1, -1}) == MukaiVector{1, 1, -3}, "WIT1 image");
    c.finish();
}

// criterion 7: exact round-trips
void criterion_round_trips() {
    Criterion c("criterion-7 round-trips", 10.0);
    for (int i = 0; i < 10000; ++i) {
        FmSetup su = rand_setup(20);
        MukaiVector v = rand_vector(1000);
        if (fm_inverse_apply(su, fm_apply(su, v)) != v)
            c.require(false, "transform round-trip failed at r0=" + su.r0.str());

        Surface s(rand_int(0, 1) == 0 ? SurfaceKind::Abelian : SurfaceKind::K3,
                  2 * rand_int(1, 20));
        Int rank = rand_int(-1000, 1000), c1 = rand_int(-1000, 1000), c2v = rand_int(-1000, 1000);
        ChernData back = to_chern(from_chern(rank, c1, c2v, s), s);
        if (back.rank != rank || back.c1_coeff != c1 || back.c2 != c2v)
            c.require(false, "chern round-trip failed");
    }
    c.finish();
}

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
    std::string cmd = cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {-1, "popen failed"};
    std::string out;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    return {WEXITSTATUS(pclose(pipe)), out};
}

// criterion 8: the CLI regression command, plus its corruption self-test
void criterion_verify_paper(const std::string& cli) {
    Criterion c("criterion-8 verify-paper", 30.0);
    CliResult clean = run_cli(cli, "verify-paper");
    c.require(clean.exit_code == 0, "verify-paper exited " + std::to_string(clean.exit_code));
    c.require(clean.output.find("FAIL") == std::string::npos, "verify-paper printed a FAIL");
    size_t pass_lines = 0;
    for (size_t pos = clean.output.find("PASS "); pos != std::string::npos;
         pos = clean.output.find("PASS ", pos + 1))
        ++pass_lines;
    c.require(pass_lines >= 20, "too few enumerated checks: " + std::to_string(pass_lines));

    CliResult corrupted = run_cli(cli, "verify-paper --corrupt reflection_canonical");
    c.require(corrupted.exit_code != 0, "corrupted run still exited 0");
    c.require(corrupted.output.find("FAIL reflection_canonical") != std::string::npos,
              "corrupted run did not name the check");
    c.require(corrupted.output.find("expected=") != std::string::npos &&
                  corrupted.output.find("actual=1,1,3") != std::string::npos,
              "corrupted run did not print the diff");
    c.finish();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-mukai-cli>\n";
        return 64;
    }
    criterion_example2();
    criterion_example1_sweep();
    criterion_isometry_and_degree();
    criterion_normalization();
    criterion_degeneration();
    criterion_round_trips();
    criterion_verify_paper(argv[1]);
    if (g_failures == 0)
        std::cout << "all acceptance criteria passed\n";
    else
        std::cout << g_failures << " acceptance criteria failed\n";
    return g_failures;
}
