#include "fusionbench/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <CLI11.hpp>

#include "fusionbench/catalog.hpp"
#include "fusionbench/errors.hpp"
#include "fusionbench/exact_factorization.hpp"
#include "fusionbench/format.hpp"
#include "fusionbench/grading.hpp"
#include "fusionbench/serialize.hpp"

namespace fusionbench {

namespace {

namespace fs = std::filesystem;

double default_tolerance() {
    if (const char* env = std::getenv("FUSIONBENCH_TOL")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0)) throw InputError("FUSIONBENCH_TOL must be a positive number");
        return v;
    }
    return kDefaultTolerance;
}

std::string kind_name(ObjectKind k) {
    switch (k) {
        case ObjectKind::Ring: return "ring";
        case ObjectKind::Group: return "group";
        case ObjectKind::Grading: return "grading";
        case ObjectKind::MatchedPair: return "matched_pair";
        case ObjectKind::Category: return "category";
    }
    return "unknown";
}

FusionRing ring_of(const Json& j) {
    ObjectKind k = detect_kind(j);
    if (k == ObjectKind::Ring) return ring_from_json(j);
    if (k == ObjectKind::Category) return ring_from_json(j.at("ring"));
    throw InputError("expected a ring or category file, got a " + kind_name(k));
}

// Labels first, then plain indices.
std::vector<int> parse_indices(const FusionRing& R, const std::string& list) {
    std::vector<int> out;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (auto i = R.index_of(tok)) {
            out.push_back(*i);
            continue;
        }
        char* end = nullptr;
        long v = std::strtol(tok.c_str(), &end, 10);
        if (*end != '\0' || v < 0 || v >= R.rank()) throw InputError("unknown basis element '" + tok + "'");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

std::vector<int> split_ints(const std::string& list) {
    std::vector<int> out;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        char* end = nullptr;
        long v = std::strtol(tok.c_str(), &end, 10);
        if (tok.empty() || *end != '\0') throw InputError("expected a comma-separated index list, got '" + list + "'");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

std::vector<std::string> split_tokens(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

int parse_sign(const std::string& s) {
    if (s == "+" || s == "+1" || s == "1") return 1;
    if (s == "-" || s == "-1") return -1;
    throw InputError("expected a sign (+ or -), got '" + s + "'");
}

std::string list_labels(const FusionRing& R, const std::vector<int>& idx) {
    return subring_to_string(R, Subring{idx});
}

struct Ctx {
    std::ostream& out;
    std::ostream& err;
    bool json = false;
};

int emit_report(Ctx& c, const Report& r, Json extra = Json::object()) {
    if (c.json) {
        extra["report"] = to_json(r);
        c.out << dump(extra);
    } else {
        c.out << r.to_text();
    }
    return r.pass ? 0 : 1;
}

int cmd_validate(Ctx& c, const std::string& file, const std::string& ring_file, double tol) {
    Json j = read_json_file(file);
    ObjectKind k = detect_kind(j);
    Report rep;
    switch (k) {
        case ObjectKind::Ring: rep = validate_fusion_ring(ring_from_json(j)); break;
        case ObjectKind::Group: {
            auto labels = j.at("elements").get<std::vector<std::string>>();
            auto table = j.at("table").get<std::vector<std::vector<int>>>();
            rep = validate_group(labels, table, j.at("identity").get<int>());
            break;
        }
        case ObjectKind::Grading: {
            if (ring_file.empty()) throw InputError("validating a grading needs --ring");
            Grading g = grading_from_json(j);
            rep = verify_grading(ring_of(read_json_file(ring_file)), g.group, g.degree);
            break;
        }
        case ObjectKind::MatchedPair:
            rep = validate_ring_matched_pair(matched_pair_from_json(j, fs::path(file).parent_path()));
            break;
        case ObjectKind::Category: {
            FusionCategoryData cat = category_from_json(j);
            rep.merge(validate_fusion_ring(cat.ring), "ring");
            Report s = validate_category_structure(cat);
            rep.merge(s, "structure");
            if (s.pass) {
                rep.merge(check_pentagon(cat, tol));
                rep.merge(check_triangle(cat, tol));
            }
            break;
        }
    }
    return emit_report(c, rep, Json{{"kind", kind_name(k)}, {"file", file}});
}

int cmd_invariants(Ctx& c, const std::string& file) {
    FusionRing R = ring_of(read_json_file(file));
    Report v = validate_fusion_ring(R);
    if (!v.pass) return emit_report(c, v);
    auto dims = fpdims(R);
    UniversalGrading U = universal_grading(R);
    Subring ad = adjoint_subring(R), pt = pointed_subring(R);
    Nilpotency nil = is_nilpotent(R);
    double total = fpdim_ring(R);
    if (c.json) {
        Json d = Json::array();
        for (double x : dims) d.push_back(round12(x));
        Json degree = Json::array();
        for (int x : U.degree) degree.push_back(U.group.label(x));
        c.out << dump(Json{{"rank", R.rank()},
                           {"fpdim", round12(total)},
                           {"fpdims", d},
                           {"basis", R.labels()},
                           {"universal_grading", describe_group(U.group)},
                           {"universal_order", U.group.order()},
                           {"degree", degree},
                           {"adjoint", ad.indices},
                           {"pointed", pt.indices},
                           {"nilpotent", nil.nilpotent},
                           {"depth", nil.nilpotent ? Json(nil.depth) : Json(nullptr)}});
        return 0;
    }
    c.out << "rank: " << R.rank() << "\n";
    c.out << "FPdim: " << format_number(total) << "\n";
    c.out << "FPdims:";
    for (int i = 0; i < R.rank(); ++i) c.out << " " << R.label(i) << "=" << format_number(dims[i]);
    c.out << "\n";
    c.out << "U(R): " << describe_group(U.group) << " (order " << U.group.order() << ")\n";
    c.out << "degrees:";
    for (int i = 0; i < R.rank(); ++i) c.out << " " << R.label(i) << "->" << U.group.label(U.degree[i]);
    c.out << "\n";
    c.out << "adjoint: " << subring_to_string(R, ad) << "\n";
    c.out << "pointed: " << subring_to_string(R, pt) << "\n";
    if (nil.nilpotent) c.out << "nilpotent: yes, depth " << nil.depth << "\n";
    else c.out << "nilpotent: no\n";
    return 0;
}

int cmd_factorize(Ctx& c, const std::string& file, const std::string& a, const std::string& cc,
                  const std::string& out_file) {
    FusionRing R = ring_of(read_json_file(file));
    Report v = validate_fusion_ring(R);
    if (!v.pass) return emit_report(c, v);
    std::vector<int> A, C;
    if (a.empty() && cc.empty()) {
        auto split = bicrossed_split(R);
        if (!split) throw InputError("no --A/--C given and the basis labels are not of the form a⋈c");
        A = split->first;
        C = split->second;
    } else {
        if (a.empty() || cc.empty()) throw InputError("give both --A and --C");
        A = parse_indices(R, a);
        C = parse_indices(R, cc);
    }
    FactorizationCheck fc = check_exact_factorization(R, A, C);
    Report rep;
    rep.merge(fc.report, "factorization");
    Json extra{{"A", list_labels(R, A)}, {"C", list_labels(R, C)}};
    if (fc.factorization) {
        rep.merge(certify_theorem_iso(*fc.factorization), "certify");
        RingMatchedPair m = canonical_matched_pair(*fc.factorization);
        extra["U_A"] = describe_group(m.H());
        extra["U_C"] = describe_group(m.K());
        if (!out_file.empty()) write_text_file(out_file, dump(to_json(m)));
        if (!c.json)
            c.out << "A = " << list_labels(R, A) << ", C = " << list_labels(R, C) << ", U(A) = " << describe_group(m.H())
                  << ", U(C) = " << describe_group(m.K()) << "\n";
    }
    return emit_report(c, rep, extra);
}

int cmd_bicrossed(Ctx& c, const std::string& file, const std::string& out_file) {
    RingMatchedPair m = matched_pair_from_json(read_json_file(file), fs::path(file).parent_path());
    Report v = validate_ring_matched_pair(m);
    if (!v.pass) return emit_report(c, v);
    FusionRing B = ring_bicrossed(m);
    if (out_file.empty()) {
        c.out << dump(to_json(B));
        return 0;
    }
    write_text_file(out_file, dump(to_json(B)));
    return emit_report(c, validate_fusion_ring(B), Json{{"out", out_file}, {"rank", B.rank()}});
}

int cmd_make(Ctx& c, const MakeOptions& o, const std::string& out_file) {
    std::string text = dump(make_object(o));
    if (out_file.empty()) c.out << text;
    else write_text_file(out_file, text);
    return 0;
}

int cmd_pentagon(Ctx& c, const std::string& file, double tol, int threads, bool triangle) {
    FusionCategoryData cat = category_from_json(read_json_file(file));
    auto t0 = std::chrono::steady_clock::now();
    Report rep = triangle ? check_triangle(cat, tol) : check_pentagon(cat, tol, threads);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!c.json) c.out << "rank " << cat.ring.rank() << ", tol " << format_number(tol) << ", " << format_number(secs) << " s\n";
    return emit_report(c, rep, Json{{"rank", cat.ring.rank()}, {"tol", tol}});
}

int cmd_examples(Ctx& c, const std::string& dir) {
    bool ok = true;
    Json listing = Json::array();
    if (!dir.empty()) fs::create_directories(dir);
    for (const auto& e : examples_catalog()) {
        Json entry{{"name", e.name}, {"kind", e.options.kind}, {"description", e.description}};
        if (!dir.empty()) {
            Json obj = make_object(e.options);
            fs::path p = fs::path(dir) / (e.name + ".json");
            write_text_file(p, dump(obj));
            std::ostringstream sink;
            Ctx quiet{sink, c.err, false};
            int code = cmd_validate(quiet, p.string(), "", kDefaultTolerance);
            entry["pass"] = code == 0;
            ok = ok && code == 0;
            if (!c.json) c.out << (code == 0 ? "PASS " : "FAIL ") << p.string() << "  " << e.description << "\n";
        } else if (!c.json) {
            c.out << e.name << "  (" << e.options.kind << ")  " << e.description << "\n";
        }
        listing.push_back(entry);
    }
    if (c.json) c.out << dump(Json{{"examples", listing}});
    return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"fusionbench: fusion rings, bicrossed products and associator checks"};
    app.name("fusionbench");
    app.require_subcommand(1);
    Ctx ctx{out, err};
    app.add_flag("--json", ctx.json, "emit JSON on standard output");

    std::string file, ring_file, a_list, c_list, out_file, dir;
    std::string tol_text;
    int threads = 1;

    auto* validate = app.add_subcommand("validate", "check the axioms of a ring, group, grading, matched pair or category");
    validate->add_option("file", file, "input JSON")->required();
    validate->add_option("--ring", ring_file, "ring for a grading file");
    validate->add_option("--tol", tol_text, "pentagon/triangle tolerance for categories");

    auto* invariants = app.add_subcommand("invariants", "FPdim, universal grading, adjoint and pointed parts, nilpotency");
    invariants->add_option("file", file, "ring or category JSON")->required();

    auto* factorize = app.add_subcommand("factorize", "check an exact factorization and certify it as a bicrossed product");
    factorize->add_option("file", file, "ring or category JSON")->required();
    factorize->add_option("--A", a_list, "basis of A (labels or indices, comma separated)");
    factorize->add_option("--C", c_list, "basis of C");
    factorize->add_option("--out", out_file, "write the canonical matched pair here");

    auto* bicrossed = app.add_subcommand("bicrossed", "build the bicrossed ring of a matched pair");
    bicrossed->add_option("file", file, "matched pair JSON")->required();
    bicrossed->add_option("--out", out_file, "output ring JSON");

    MakeOptions mo;
    std::string chi, zeta, tau = "+", upsilon = "+", theta_l = "+", theta_r = "+", phi, psi, gamma_perm;
    auto* make = app.add_subcommand("make", "construct a ring, matched pair or category");
    make->add_option("kind", mo.kind, "kind")->required()->check(CLI::IsMember(make_kinds()));
    make->add_option("--group", mo.group, "Γ or H: Cn, CnxCm, S3 or a group JSON file");
    make->add_option("--k-group", mo.k_group, "K: second group of a bicrossed family");
    make->add_option("--chi", chi, "bicharacter values per cyclic factor: 1, -1, i, -i or p/q");
    make->add_option("--zeta", zeta, "second bicharacter (ty-ty)");
    make->add_option("--tau", tau, "sign of tau");
    make->add_option("--upsilon", upsilon, "sign of upsilon (ty-ty)");
    make->add_option("--omega", mo.omega, "exponent p of the cyclic 3-cocycle");
    make->add_option("--theta-l", theta_l, "θ_ℓ(σ) = ±1 (ty-ty)");
    make->add_option("--theta-r", theta_r, "θ_r(σ) = ±1 (ty-ty)");
    make->add_option("--phi", phi, "automorphism as an index list");
    make->add_option("--psi", psi, "automorphism of K as an index list (ty-ty)");
    make->add_option("--gamma-perm", gamma_perm, "automorphism of Γ for the generator of cyclic K");
    make->add_option("--out", out_file, "output file (default stdout)");

    auto* pentagon = app.add_subcommand("pentagon", "check the pentagon equations of a category");
    pentagon->add_option("file", file, "category JSON")->required();
    pentagon->add_option("--tol", tol_text, "tolerance (default 1e-9 or FUSIONBENCH_TOL)");
    pentagon->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256));

    auto* triangle = app.add_subcommand("triangle", "check the triangle equations of a category");
    triangle->add_option("file", file, "category JSON")->required();
    triangle->add_option("--tol", tol_text, "tolerance");

    auto* examples = app.add_subcommand("examples", "list or write the example catalog");
    examples->add_option("--dir", dir, "write every example into this directory and validate it");

    std::vector<std::string> argv_store{"fusionbench"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << "error: " << e.what() << "\n" << sub->help();
        return 2;
    }

    try {
        double tol = tol_text.empty() ? default_tolerance() : std::stod(tol_text);
        if (!(tol > 0)) throw InputError("--tol must be positive");
        if (*validate) return cmd_validate(ctx, file, ring_file, tol);
        if (*invariants) return cmd_invariants(ctx, file);
        if (*factorize) return cmd_factorize(ctx, file, a_list, c_list, out_file);
        if (*bicrossed) return cmd_bicrossed(ctx, file, out_file);
        if (*make) {
            if (!chi.empty()) mo.chi = split_tokens(chi);
            if (!zeta.empty()) mo.zeta = split_tokens(zeta);
            mo.tau = parse_sign(tau);
            mo.upsilon = parse_sign(upsilon);
            mo.theta_l = parse_sign(theta_l);
            mo.theta_r = parse_sign(theta_r);
            if (!phi.empty()) mo.phi = split_ints(phi);
            if (!psi.empty()) mo.psi = split_ints(psi);
            if (!gamma_perm.empty()) mo.gamma_perm = split_ints(gamma_perm);
            return cmd_make(ctx, mo, out_file);
        }
        if (*pentagon) return cmd_pentagon(ctx, file, tol, threads, false);
        if (*triangle) return cmd_pentagon(ctx, file, tol, 1, true);
        if (*examples) return cmd_examples(ctx, dir);
    } catch (const ValidationError& e) {
        if (ctx.json) out << dump(Json{{"error", e.what()}, {"report", to_json(e.report())}});
        else err << "rejected: " << e.what() << "\n" << e.report().to_text();
        return 1;
    } catch (const InternalError& e) {
        err << "inconsistent input: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "error: malformed JSON object: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: bad number: " << e.what() << "\n";
        return 2;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace fusionbench
