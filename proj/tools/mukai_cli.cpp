// Command-line front end for the Mukai-lattice toolkit. Every engine
// operation is reachable as a subcommand; --json switches the output to a
// single schema-stable JSON document. Exit codes: 0 success, 1 domain error
// (a violated hypothesis), 2 usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "mukai/mukai.hpp"
#include "mukai/vector_io.hpp"

using json = nlohmann::ordered_json;
using namespace mukai;

namespace {

SurfaceKind parse_kind(const std::string& s) {
    if (s == "abelian") return SurfaceKind::Abelian;
    if (s == "k3") return SurfaceKind::K3;
    throw std::invalid_argument("cannot parse --kind: offending token '" + s +
                                "' (expected abelian or k3)");
}

// Options shared across subcommands; presence is validated per command.
struct CommonOpts {
    std::string kind, lsq, r0, d0, k, d1, m, bound, d0_bound, n, s, corrupt;
    bool json = false;
    bool g_variant = false;
    bool inverse_chern = false;
    std::vector<std::string> positional;
};

Surface surface_from(const CommonOpts& o) {
    if (o.kind.empty() || o.lsq.empty())
        throw std::invalid_argument("this command needs --kind and --lsq");
    return Surface(parse_kind(o.kind), parse_int(o.lsq, "--lsq"));
}

FmSetup setup_from(const CommonOpts& o) {
    if (o.kind.empty() || o.r0.empty() || o.d0.empty() || o.k.empty())
        throw std::invalid_argument("this command needs --kind, --r0, --d0 and --k");
    SurfaceKind kind = parse_kind(o.kind);
    Int r0 = parse_int(o.r0, "--r0"), d0 = parse_int(o.d0, "--d0"), k = parse_int(o.k, "--k");
    if (!o.lsq.empty() && parse_int(o.lsq, "--lsq") != 2 * r0 * k)
        throw std::invalid_argument("--lsq contradicts the setup: (L^2) = 2*r0*k = " +
                                    Int(2 * r0 * k).str());
    if (!o.d1.empty()) return make_setup_with_d1(kind, r0, d0, k, parse_int(o.d1, "--d1"));
    return make_setup(kind, r0, d0, k);
}

json setup_inputs(const CommonOpts& o, const FmSetup& su) {
    json in;
    in["kind"] = o.kind;
    in["r0"] = su.r0.str();
    in["d0"] = su.d0.str();
    in["k"] = su.k.str();
    in["d1"] = su.d1.str();
    in["l"] = su.l.str();
    return in;
}

void emit(const CommonOpts& o, const std::string& command, const json& inputs,
          const json& outputs, const json& assumptions, const std::string& text) {
    if (o.json) {
        json doc;
        doc["command"] = command;
        doc["inputs"] = inputs;
        doc["outputs"] = outputs;
        doc["assumptions"] = assumptions;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << text;
    }
}

json verdict_outputs(const TheoremVerdict& t) {
    json out;
    out["case"] = to_string(t.kind);
    out["raw_image"] = t.raw_image ? json(t.raw_image->str()) : json(nullptr);
    out["canonical_image"] = t.canonical_image ? json(t.canonical_image->str()) : json(nullptr);
    out["pairing_with_v0dual"] = t.pairing_with_v0dual.str();
    return out;
}

Int search_ceiling() {
    const char* env = std::getenv("MUKAI_SEARCH_CEILING");
    if (env == nullptr || *env == '\0') return kDefaultSearchCeiling;
    return parse_int(env, "MUKAI_SEARCH_CEILING");
}

int run(const std::string& cmd, CommonOpts& o) {
    auto pos = [&o](size_t i) -> const std::string& {
        if (i >= o.positional.size())
            throw std::invalid_argument("missing positional argument #" + std::to_string(i + 1));
        return o.positional[i];
    };

    if (cmd == "pair") {
        Surface s = surface_from(o);
        MukaiVector v = parse_vector(pos(0)), w = parse_vector(pos(1));
        Int p = pairing(v, w, s);
        emit(o, cmd,
             json{{"kind", o.kind}, {"l_sq", s.l_sq.str()}, {"v", v.str()}, {"w", w.str()}},
             json{{"pairing", p.str()}}, json::array(), p.str() + "\n");
    } else if (cmd == "square") {
        Surface s = surface_from(o);
        MukaiVector v = parse_vector(pos(0));
        Int sq = v_squared(v, s);
        emit(o, cmd, json{{"kind", o.kind}, {"l_sq", s.l_sq.str()}, {"v", v.str()}},
             json{{"v_squared", sq.str()}}, json::array(), sq.str() + "\n");
    } else if (cmd == "dual") {
        MukaiVector v = parse_vector(pos(0));
        MukaiVector w = dual(v);
        emit(o, cmd, json{{"v", v.str()}}, json{{"dual", w.str()}}, json::array(),
             w.str() + "\n");
    } else if (cmd == "twist") {
        Surface s = surface_from(o);
        MukaiVector v = parse_vector(pos(0));
        Int m = parse_int(pos(1), "twist exponent");
        MukaiVector w = twist(v, m, s);
        emit(o, cmd,
             json{{"kind", o.kind}, {"l_sq", s.l_sq.str()}, {"v", v.str()}, {"m", m.str()}},
             json{{"twisted", w.str()}}, json::array(), w.str() + "\n");
    } else if (cmd == "chern") {
        Surface s = surface_from(o);
        if (o.inverse_chern) {
            MukaiVector v = parse_vector(pos(0));
            ChernData cd = to_chern(v, s);
            emit(o, cmd, json{{"kind", o.kind}, {"l_sq", s.l_sq.str()}, {"v", v.str()}},
                 json{{"rank", cd.rank.str()}, {"c1", cd.c1_coeff.str()}, {"c2", cd.c2.str()}},
                 json::array(),
                 "rank=" + cd.rank.str() + " c1=" + cd.c1_coeff.str() + " c2=" + cd.c2.str() +
                     "\n");
        } else {
            MukaiVector cd = parse_vector(pos(0));  // rank,c1,c2 shares the triple syntax
            MukaiVector v = from_chern(cd.r, cd.d, cd.a, s);
            emit(o, cmd,
                 json{{"kind", o.kind},
                      {"l_sq", s.l_sq.str()},
                      {"rank", cd.r.str()},
                      {"c1", cd.d.str()},
                      {"c2", cd.a.str()}},
                 json{{"vector", v.str()}}, json::array(), v.str() + "\n");
        }
    } else if (cmd == "deg") {
        MukaiVector v = parse_vector(pos(0)), g = parse_vector(pos(1));
        Int deg = deg_rel(v, g), rk = rk_rel(v, g);
        json out;
        out["deg_rel"] = deg.str();
        out["rk_rel"] = rk.str();
        if (v.r != 0 && g.r != 0) {
            Rational mu = mu_rel(v, g);
            out["mu_rel"] = mu.str();
        } else {
            out["mu_rel"] = nullptr;
        }
        emit(o, cmd, json{{"v", v.str()}, {"g", g.str()}}, out, json::array(), deg.str() + "\n");
    } else if (cmd == "fm2") {
        if (o.kind.empty()) throw std::invalid_argument("this command needs --kind");
        Surface s(parse_kind(o.kind), o.lsq.empty() ? Int(2) : parse_int(o.lsq, "--lsq"));
        MukaiVector v = parse_vector(pos(0));
        MukaiVector w = o.g_variant ? g_transform_H(v, s) : fm_abelian_H(v, s);
        emit(o, cmd, json{{"kind", o.kind}, {"v", v.str()}, {"g_variant", o.g_variant}},
             json{{"image", w.str()}}, json::array(), w.str() + "\n");
    } else if (cmd == "classify2") {
        Surface s = surface_from(o);
        MukaiVector v = parse_vector(pos(0));
        Section2Verdict verdict = classify_section2(v, s);
        ProofBounds pb = proof_bounds(v, s);
        json out;
        out["case"] = to_string(verdict.kind);
        out["image"] = verdict.image ? json(verdict.image->str()) : json(nullptr);
        out["ext_bound"] = pb.ext_bound ? json(pb.ext_bound->str()) : json(nullptr);
        out["sections_bound"] = pb.sections_bound ? json(pb.sections_bound->str()) : json(nullptr);
        json hyps = json::array();
        for (const NamedCheck& h : verdict.hypotheses)
            hyps.push_back(json{{"name", h.name}, {"passed", h.passed}});
        out["hypotheses"] = hyps;
        std::string text = std::string("case=") + to_string(verdict.kind);
        if (verdict.image) text += " image=" + verdict.image->str();
        text += "\n";
        if (pb.ext_bound) text += "ext_bound=" + pb.ext_bound->str() + "\n";
        if (pb.sections_bound) text += "sections_bound=" + pb.sections_bound->str() + "\n";
        emit(o, cmd, json{{"kind", o.kind}, {"l_sq", s.l_sq.str()}, {"v", v.str()}}, out,
             json::array({"E mu-stable with respect to L (not verified)"}), text);
    } else if (cmd == "setup") {
        FmSetup su = setup_from(o);
        IntMatrix3 m = fm_matrix(su);
        json rows = json::array();
        for (int row = 0; row < 3; ++row)
            rows.push_back(json::array(
                {m.at(row, 0).str(), m.at(row, 1).str(), m.at(row, 2).str()}));
        json out;
        out["d1"] = su.d1.str();
        out["l"] = su.l.str();
        out["l_sq"] = su.l_sq().str();
        out["v0"] = su.v0().str();
        out["matrix"] = rows;
        out["det"] = m.det().str();
        std::string text = "d1=" + su.d1.str() + " l=" + su.l.str() + " l_sq=" +
                           su.l_sq().str() + " v0=" + su.v0().str() + " (" + pretty(su.v0()) +
                           ")\n";
        for (int row = 0; row < 3; ++row)
            text += "[" + m.at(row, 0).str() + " " + m.at(row, 1).str() + " " +
                    m.at(row, 2).str() + "]\n";
        text += "det=" + m.det().str() + "\n";
        emit(o, cmd, setup_inputs(o, su), out, json::array(), text);
    } else if (cmd == "fm" || cmd == "inverse") {
        FmSetup su = setup_from(o);
        MukaiVector v = parse_vector(pos(0));
        MukaiVector w = cmd == "fm" ? fm_apply(su, v) : fm_inverse_apply(su, v);
        json in = setup_inputs(o, su);
        in["v"] = v.str();
        emit(o, cmd, in, json{{cmd == "fm" ? "image" : "preimage", w.str()}}, json::array(),
             w.str() + "\n");
    } else if (cmd == "theorem") {
        FmSetup su = setup_from(o);
        MukaiVector v = parse_vector(pos(0));
        TheoremVerdict t = theorem_map(su, v);
        json in = setup_inputs(o, su);
        in["v"] = v.str();
        std::string text = std::string("case=") + to_string(t.kind);
        if (t.canonical_image) text += " target=" + t.canonical_image->str();
        text += "\n";
        emit(o, cmd, in, verdict_outputs(t), json(t.assumptions), text);
    } else if (cmd == "appendix") {
        FmSetup su = setup_from(o);
        MukaiVector v = parse_vector(pos(0));
        TheoremVerdict t = classify_appendix(su, v);
        json in = setup_inputs(o, su);
        in["v"] = v.str();
        std::string text = std::string("case=") + to_string(t.kind) + " raw=" +
                           t.raw_image->str();
        if (t.canonical_image) text += " canonical=" + t.canonical_image->str();
        text += "\n";
        emit(o, cmd, in, verdict_outputs(t), json(t.assumptions), text);
    } else if (cmd == "reflect") {
        Surface s = surface_from(o);
        MukaiVector v = parse_vector(pos(0)), u = parse_vector(pos(1));
        MukaiVector w = reflection(v, u, s);
        emit(o, cmd,
             json{{"kind", o.kind}, {"l_sq", s.l_sq.str()}, {"v", v.str()}, {"u", u.str()}},
             json{{"image", w.str()}}, json::array(), w.str() + "\n");
    } else if (cmd == "hilb") {
        Surface s = surface_from(o);
        MukaiVector v = parse_vector(pos(0));
        std::optional<Int> n = hilbert_index(v, s);
        emit(o, cmd, json{{"kind", o.kind}, {"l_sq", s.l_sq.str()}, {"v", v.str()}},
             json{{"hilbert_index", n ? json(n->str()) : json(nullptr)}}, json::array(),
             (n ? n->str() : std::string("absent")) + "\n");
    } else if (cmd == "dim") {
        Surface s = surface_from(o);
        MukaiVector v = parse_vector(pos(0));
        Int d = moduli_dim(v, s);
        emit(o, cmd, json{{"kind", o.kind}, {"l_sq", s.l_sq.str()}, {"v", v.str()}},
             json{{"moduli_dim", d.str()}}, json::array(), d.str() + "\n");
    } else if (cmd == "example1") {
        if (o.kind.empty() || o.r0.empty() || o.n.empty() || o.s.empty())
            throw std::invalid_argument("this command needs --kind, --r0, --n and --s");
        Example1Case c = example1_family(parse_kind(o.kind), parse_int(o.r0, "--r0"),
                                         parse_int(o.n, "--n"), parse_int(o.s, "--s"));
        json out;
        out["v"] = c.v.str();
        out["v0"] = c.setup.v0().str();
        out["d1"] = c.setup.d1.str();
        out["l"] = c.setup.l.str();
        out["l_sq"] = c.setup.l_sq().str();
        out["v_sq"] = c.v_sq.str();
        out["p"] = c.p.str();
        out["case"] = to_string(c.verdict.kind);
        out["canonical_image"] = c.verdict.canonical_image->str();
        emit(o, cmd,
             json{{"kind", o.kind}, {"r0", o.r0}, {"n", o.n}, {"s", o.s}}, out,
             json(c.verdict.assumptions),
             "v=" + c.v.str() + " v0=" + c.setup.v0().str() + " l_sq=" + c.setup.l_sq().str() +
                 " v_sq=" + c.v_sq.str() + " p=" + c.p.str() + " case=" +
                 to_string(c.verdict.kind) + "\n");
    } else if (cmd == "example2") {
        Example2Trace tr = example2_k3();
        json steps = json::array();
        std::string text;
        for (const Example2Step& st : tr.steps) {
            steps.push_back(json{{"op", st.op}, {"input", st.input}, {"output", st.output}});
            text += st.op + ": " + st.input + " -> " + st.output + "\n";
        }
        emit(o, cmd, json::object(), json{{"steps", steps}}, json::array(), text);
    } else if (cmd == "search") {
        FmSetup su = setup_from(o);
        if (o.bound.empty()) throw std::invalid_argument("this command needs --bound");
        Int bound = parse_int(o.bound, "--bound");
        std::vector<TheoremVerdict> results = search_theorem_applicable(su, bound,
                                                                        search_ceiling());
        json arr = json::array();
        std::string text;
        for (const TheoremVerdict& t : results) {
            json item;
            item["v"] = t.input.str();
            item["v_sq"] = v_squared(t.input, su.source).str();
            item["case"] = to_string(t.kind);
            item["canonical_image"] =
                t.canonical_image ? json(t.canonical_image->str()) : json(nullptr);
            arr.push_back(item);
            text += "v=" + t.input.str() + " v_sq=" + v_squared(t.input, su.source).str() +
                    " case=" + to_string(t.kind);
            if (t.canonical_image) text += " canonical=" + t.canonical_image->str();
            text += "\n";
        }
        json in = setup_inputs(o, su);
        in["bound"] = bound.str();
        emit(o, cmd, in, json{{"count", results.size()}, {"results", arr}}, json::array(), text);
    } else if (cmd == "setups") {
        if (o.kind.empty() || o.lsq.empty() || o.d0_bound.empty())
            throw std::invalid_argument("this command needs --kind, --lsq and --d0-bound");
        std::vector<FmSetup> all = enumerate_setups(parse_kind(o.kind), parse_int(o.lsq, "--lsq"),
                                                    parse_int(o.d0_bound, "--d0-bound"));
        json arr = json::array();
        std::string text;
        for (const FmSetup& su : all) {
            arr.push_back(json{{"r0", su.r0.str()},
                               {"d0", su.d0.str()},
                               {"k", su.k.str()},
                               {"d1", su.d1.str()},
                               {"l", su.l.str()}});
            text += "r0=" + su.r0.str() + " d0=" + su.d0.str() + " k=" + su.k.str() +
                    " d1=" + su.d1.str() + " l=" + su.l.str() + "\n";
        }
        emit(o, cmd, json{{"kind", o.kind}, {"l_sq", o.lsq}, {"d0_bound", o.d0_bound}},
             json{{"count", all.size()}, {"setups", arr}}, json::array(), text);
    } else if (cmd == "verify-paper") {
        PaperReport report = verify_paper(o.corrupt);
        json arr = json::array();
        std::string text;
        int failed = 0;
        for (const PaperCheck& c : report.checks) {
            arr.push_back(json{{"name", c.name},
                               {"expected", c.expected},
                               {"actual", c.actual},
                               {"passed", c.passed}});
            if (c.passed) {
                text += "PASS " + c.name + "\n";
            } else {
                ++failed;
                text += "FAIL " + c.name + ": expected=" + c.expected + " actual=" + c.actual +
                        "\n";
            }
        }
        text += std::to_string(report.checks.size()) + " checks, " + std::to_string(failed) +
                " failed\n";
        emit(o, cmd, json{{"corrupt", o.corrupt.empty() ? json(nullptr) : json(o.corrupt)}},
             json{{"total", report.checks.size()}, {"failed", failed}, {"checks", arr}},
             json::array(), text);
        return report.all_passed ? 0 : 1;
    } else {
        throw std::invalid_argument("unknown command '" + cmd + "'");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Mukai-lattice arithmetic and Fourier-Mukai transforms "
                 "for Picard-rank-1 abelian and K3 surfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    app.allow_extras();  // vectors reach run() as free arguments

    CommonOpts o;
    app.add_flag("--json", o.json, "emit a single JSON document instead of text");

    struct SubSpec {
        const char* name;
        const char* desc;
    };
    const SubSpec specs[] = {
        {"pair", "Mukai pairing <v,w>"},
        {"square", "self-pairing <v^2>"},
        {"dual", "cohomological dual (r,d,a) -> (r,-d,a)"},
        {"twist", "tensor by L^m on the lattice"},
        {"chern", "Chern data (rank,c1,c2) -> Mukai vector (or back with --inverse)"},
        {"deg", "relative degree deg_g(v)"},
        {"fm2", "classical abelian transform (or its dual composite with --g)"},
        {"classify2", "WIT/IT classifier for v = r + c1(L) + a w, with proof bounds"},
        {"setup", "solve the Bezout data and print the transform matrix"},
        {"fm", "apply the generalized transform"},
        {"inverse", "apply the inverse transform"},
        {"theorem", "decide the moduli-isomorphism case for v"},
        {"appendix", "degree-0 classifier"},
        {"reflect", "spherical reflection of v in u"},
        {"hilb", "Hilbert-scheme index of a rank-1 vector"},
        {"dim", "dim M_L(v) = <v^2> + 2"},
        {"example1", "the rank-1-degree family (r0, n, s)"},
        {"example2", "replay the scripted K3 Hilb^4 walk"},
        {"search", "enumerate theorem-applicable vectors up to --bound"},
        {"setups", "enumerate valid setups for a given (L^2)"},
        {"verify-paper", "run the frozen regression checks"},
    };

    for (const SubSpec& spec : specs) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.desc);
        sub->fallthrough();
        // vectors arrive as free arguments so that "-1,-1,-3" parses
        sub->allow_extras();
        sub->add_option("--kind", o.kind, "surface kind: abelian or k3");
        sub->add_option("--lsq", o.lsq, "(L^2), positive even");
        sub->add_option("--r0", o.r0, "setup r0");
        sub->add_option("--d0", o.d0, "setup d0");
        sub->add_option("--k", o.k, "setup k");
        sub->add_option("--d1", o.d1, "override the canonical d1 (validated)");
        sub->add_option("--bound", o.bound, "search bound");
        sub->add_option("--d0-bound", o.d0_bound, "enumeration bound for d0");
        sub->add_option("--n", o.n, "family parameter n");
        sub->add_option("--s", o.s, "family parameter s");
        if (std::string(spec.name) == "verify-paper")
            sub->add_option("--corrupt", o.corrupt,
                            "self-test: corrupt the named check's expected value");
        if (std::string(spec.name) == "fm2")
            sub->add_flag("--g", o.g_variant, "apply the dual composite G instead of F");
        if (std::string(spec.name) == "chern")
            sub->add_flag("--inverse", o.inverse_chern, "Mukai vector -> Chern data");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        for (const std::string& extra : app.remaining(true)) o.positional.push_back(extra);
        return run(sub->get_name(), o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
