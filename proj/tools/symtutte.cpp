// symtutte: command-line front end for the polynomial engines.

#include "symtutte/egf.hpp"
#include "symtutte/exact_poly.hpp"
#include "symtutte/families.hpp"
#include "symtutte/fq_engine.hpp"
#include "symtutte/interpolation.hpp"
#include "symtutte/subset_engine.hpp"
#include "symtutte/symmetric_engine.hpp"
#include "symtutte/text_format.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace symtutte;

struct Input {
    std::string family;
    std::size_t n = 0;
    std::string file;
};

struct Global {
    Input input;
    unsigned threads = 1;
    bool unsafe = false;
    bool json = false;
    std::size_t cap = 22;
};

struct Loaded {
    Arrangement arrangement{1};
    const Family* family = nullptr;
    std::size_t n = 0;
};

// For egf only the family matters; its n defaults to the family minimum.
Loaded load(const Input& in, bool n_optional) {
    if (!in.family.empty() && !in.file.empty()) throw InvalidArgument("cli", "--family and --file are exclusive");
    Loaded out;
    if (!in.file.empty()) {
        auto parsed = parse_arrangement_file(in.file);
        if (auto* a = std::get_if<Arrangement>(&parsed)) {
            out.arrangement = std::move(*a);
            out.n = out.arrangement.dim();
            return out;
        }
        const auto& spec = std::get<FamilySpec>(parsed);
        out.family = &family_by_name(spec.name);
        out.n = spec.n;
    } else if (!in.family.empty()) {
        out.family = &family_by_name(in.family);
        if (in.n == 0 && !n_optional) throw InvalidArgument("cli", "--family needs --n");
        out.n = in.n == 0 ? out.family->min_n : in.n;
    } else {
        throw InvalidArgument("cli", "no input: give --family NAME --n K or --file PATH");
    }
    if (out.n < out.family->min_n) {
        throw InvalidArgument("cli", out.family->name + " needs n >= " + std::to_string(out.family->min_n));
    }
    out.arrangement = out.family->build(out.n);
    return out;
}

enum class Engine { Subset, FiniteField, ClosedForm };

const std::map<std::string, Engine> kEngines{
    {"subset", Engine::Subset}, {"fq", Engine::FiniteField}, {"closed-form", Engine::ClosedForm}};

SubsetOptions subset_options(const Global& g) {
    SubsetOptions o;
    o.cap = g.cap;
    o.threads = g.threads;
    return o;
}

InterpolationOptions interpolation_options(const Global& g, Engine engine, const std::vector<std::uint32_t>& primes) {
    InterpolationOptions o;
    o.primes = primes;
    o.threads = g.threads;
    o.certify = !g.unsafe;
    o.engine = engine == Engine::ClosedForm ? PointEngine::ClosedForm : PointEngine::FiniteField;
    return o;
}

TPoly coboundary_at(const Arrangement& a, std::uint32_t q, Engine engine, const Global& g) {
    switch (engine) {
        case Engine::Subset:
            if (!g.unsafe) {
                // The definition holds at every q; certification only guards the other engines,
                // but a bad prime here would silently disagree with them.
                const auto report = certify(a, q);
                if (!report.certified) throw CertificationError("fq-engine", "prime " + std::to_string(q) + ": " + report.reason);
            }
            return coboundary_by_definition(a, subset_options(g)).at_first(Rational(q));
        case Engine::FiniteField:
            return coboundary_at_prime(a, q, FqOptions{g.threads, !g.unsafe});
        case Engine::ClosedForm:
            return coboundary_closed_form(a, q, ClosedFormOptions{g.threads, !g.unsafe});
    }
    throw std::logic_error("unreachable");
}

CoboundaryPoly symbolic_coboundary(const Arrangement& a, Engine engine, const std::vector<std::uint32_t>& primes,
                                   const Global& g) {
    if (engine == Engine::Subset) return coboundary_by_definition(a, subset_options(g));
    return recover_coboundary(a, interpolation_options(g, engine, primes));
}

CharPoly characteristic(const Arrangement& a, Engine engine, const std::vector<std::uint32_t>& primes, const Global& g) {
    if (engine == Engine::Subset) {
        return characteristic_from_coboundary(coboundary_by_definition(a, subset_options(g)), a.dim(), a.rank());
    }
    return recover_characteristic(a, interpolation_options(g, engine, primes));
}

std::string permutation_string(const Permutation& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(p(i) + 1);
    }
    return out + "]";
}

std::string residues_string(const std::vector<std::uint32_t>& r) {
    std::string out = "{";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(r[i]);
    }
    return out + "}";
}

double millis_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int run_verify(const Loaded& in, std::vector<std::uint32_t> primes, const Global& g) {
    const auto& a = in.arrangement;
    if (primes.empty()) primes = certified_primes(a, 3);
    bool symmetric = true;
    try {
        extract_representatives(a);
    } catch (const InvalidArgument&) {
        symmetric = false;
    }

    // Subset enumeration is exponential; above the cap only the other engines run.
    const bool with_subset = a.size() <= g.cap;
    if (!with_subset) {
        std::cout << "note: " << a.size() << " hyperplanes is above the enumeration cap of " << g.cap
                  << ", subset engine skipped\n";
    }
    std::string label;
    if (with_subset) label += "subset==";
    label += "fq";
    if (symmetric) label += "==closed-form";

    const auto t0 = std::chrono::steady_clock::now();
    std::optional<CoboundaryPoly> definition;
    if (with_subset) definition = coboundary_by_definition(a, subset_options(g));
    const double subset_ms = millis_since(t0);

    bool all_ok = true;
    for (auto q : primes) {
        if (!g.unsafe) {
            const auto report = certify(a, q);
            if (!report.certified) throw CertificationError("fq-engine", "prime " + std::to_string(q) + ": " + report.reason);
        }
        std::optional<TPoly> by_subset;
        if (definition) by_subset = definition->at_first(Rational(q));

        auto t1 = std::chrono::steady_clock::now();
        const TPoly by_fq = coboundary_at_prime(a, q, FqOptions{g.threads, false});
        const double fq_ms = millis_since(t1);

        std::optional<TPoly> by_closed;
        double closed_ms = 0;
        if (symmetric) {
            t1 = std::chrono::steady_clock::now();
            by_closed = coboundary_closed_form(a, q, ClosedFormOptions{g.threads, false});
            closed_ms = millis_since(t1);
        }

        const bool ok = (!by_subset || *by_subset == by_fq) && (!by_closed || *by_closed == by_fq);
        all_ok = all_ok && ok;
        std::cout << "q=" << q << ": " << label << ": " << (ok ? "OK" : "MISMATCH") << "\n";
        if (by_subset) std::cout << "  subset      " << by_subset->to_string() << "\n";
        std::cout << "  fq          " << by_fq.to_string() << "  (" << fq_ms << " ms)\n";
        if (by_closed) std::cout << "  closed-form " << by_closed->to_string() << "  (" << closed_ms << " ms)\n";
    }
    if (with_subset) std::cout << "subset engine: " << subset_ms << " ms (all primes)\n";
    if (!all_ok) {
        std::cerr << "integrity alarm: cli: engines disagree\n";
        return 3;
    }
    return 0;
}

void run_solutions(const Loaded& in, std::uint32_t q, const Global& g) {
    const auto& a = in.arrangement;
    if (!g.unsafe) {
        const auto report = certify(a, q);
        if (!report.certified) throw CertificationError("fq-engine", "prime " + std::to_string(q) + ": " + report.reason);
    }
    const auto analysis = analyze_representatives(extract_representatives(a), q);
    for (std::size_t i = 0; i < analysis.representatives.size(); ++i) {
        const auto& rep = analysis.representatives[i];
        const auto& stab = analysis.stabilizers[i];
        std::cout << "E_" << i + 1 << ": " << rep.to_string() << "\n";
        std::cout << "  stabilizer (order " << stab.order() << "):";
        for (const auto& p : stab.elements()) std::cout << " " << permutation_string(p);
        std::cout << "\n  solutions mod " << q << ":\n";
        for (const auto& s : analysis.solutions) {
            if (s.equation == i) std::cout << "    " << s.to_string() << "\n";
        }
    }
    std::cout << "indice partition:\n";
    for (std::size_t b = 0; b < analysis.partition.blocks.size(); ++b) {
        const auto& block = analysis.partition.blocks[b];
        std::cout << "  block " << b + 1 << ": " << residues_string(block.support) << " (" << block.members.size()
                  << " solutions)\n";
    }
    std::cout << "  free residues: " << residues_string(analysis.partition.free_residues()) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Tutte, coboundary and characteristic polynomials of hyperplane arrangements"};
    app.require_subcommand(1);
    Global g;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--family", g.input.family, "Built-in family name");
        cmd->add_option("--n", g.input.n, "Family size n");
        cmd->add_option("--file", g.input.file, "Arrangement file");
        cmd->add_option("--threads", g.threads, "Worker threads (0 = all cores)");
        cmd->add_flag("--unsafe", g.unsafe, "Skip prime certification");
        cmd->add_flag("--json", g.json, "Structured output");
        cmd->add_option("--cap", g.cap, "Maximum arrangement size for subset enumeration");
    };

    std::string engine_name = "subset";
    std::vector<std::uint32_t> primes;
    bool symbolic = false;
    std::size_t order = 8;

    auto* tutte = app.add_subcommand("tutte", "Tutte polynomial T(x, y)");
    add_common(tutte);
    tutte->add_option("--engine", engine_name, "subset | fq | closed-form")->check(CLI::IsMember(kEngines));
    tutte->add_option("--q", primes, "Interpolation primes (fq, closed-form)");

    auto* coboundary = app.add_subcommand("coboundary", "Coboundary polynomial, at a prime or symbolic");
    add_common(coboundary);
    coboundary->add_option("--engine", engine_name, "subset | fq | closed-form")->check(CLI::IsMember(kEngines));
    coboundary->add_option("--q", primes, "Primes (per-prime mode) or interpolation primes (--symbolic)");
    coboundary->add_flag("--symbolic", symbolic, "Full bivariate polynomial in q and t");

    auto* characteristic_cmd = app.add_subcommand("characteristic", "Characteristic polynomial chi(q)");
    add_common(characteristic_cmd);
    characteristic_cmd->add_option("--engine", engine_name, "subset | fq | closed-form")->check(CLI::IsMember(kEngines));
    characteristic_cmd->add_option("--q", primes, "Interpolation primes");

    auto* regions_cmd = app.add_subcommand("regions", "Number of regions and bounded regions");
    add_common(regions_cmd);
    regions_cmd->add_option("--engine", engine_name, "subset | fq | closed-form")->check(CLI::IsMember(kEngines));
    regions_cmd->add_option("--q", primes, "Interpolation primes");

    auto* egf_cmd = app.add_subcommand("egf", "Exponential generating function of a family at a prime");
    add_common(egf_cmd);
    egf_cmd->add_option("--order", order, "Truncation order");
    egf_cmd->add_option("--q", primes, "Prime")->required()->expected(1);

    auto* verify_cmd = app.add_subcommand("verify", "Cross-check all engines");
    add_common(verify_cmd);
    verify_cmd->add_option("--q", primes, "Primes (default: three smallest certified)");

    auto* solutions_cmd = app.add_subcommand("solutions", "Canonical solutions, stabilizers and indice partition");
    add_common(solutions_cmd);
    solutions_cmd->add_option("--q", primes, "Prime")->required()->expected(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and --version exit 0; every usage error exits 2.
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        const Loaded in = load(g.input, egf_cmd->parsed());
        const auto& a = in.arrangement;
        Engine engine = kEngines.at(engine_name);

        if (tutte->parsed()) {
            TuttePoly t = engine == Engine::Subset ? tutte_by_definition(a, subset_options(g))
                                                   : tutte_from_coboundary(symbolic_coboundary(a, engine, primes, g), a.rank());
            std::cout << (g.json ? to_json(t) : t.to_string()) << "\n";
        } else if (coboundary->parsed()) {
            if (symbolic) {
                if (coboundary->count("--engine") == 0) engine = Engine::FiniteField;
                const auto cb = symbolic_coboundary(a, engine, primes, g);
                std::cout << (g.json ? to_json(cb) : cb.to_string()) << "\n";
            } else {
                if (primes.empty()) throw InvalidArgument("cli", "coboundary needs --q P or --symbolic");
                if (coboundary->count("--engine") == 0) engine = Engine::FiniteField;
                for (auto q : primes) {
                    if (!is_prime(q)) throw InvalidArgument("cli", std::to_string(q) + " is not prime");
                    const auto value = coboundary_at(a, q, engine, g);
                    if (primes.size() > 1) std::cout << "q=" << q << ": ";
                    std::cout << (g.json ? to_json(value) : value.to_string()) << "\n";
                }
            }
        } else if (characteristic_cmd->parsed() || regions_cmd->parsed()) {
            const bool explicit_engine = (characteristic_cmd->parsed() ? characteristic_cmd : regions_cmd)->count("--engine") > 0;
            if (!explicit_engine) engine = Engine::FiniteField;
            const auto chi = characteristic(a, engine, primes, g);
            if (characteristic_cmd->parsed()) {
                std::cout << (g.json ? to_json(chi) : chi.to_string()) << "\n";
            } else {
                const auto r = regions(chi, a.dim());
                const auto b = bounded_regions(chi, a.rank());
                if (g.json) {
                    std::cout << "{\"regions\":\"" << to_string(r) << "\",\"bounded\":\"" << to_string(b) << "\"}\n";
                } else {
                    std::cout << "regions: " << to_string(r) << ", bounded: " << to_string(b) << "\n";
                }
            }
        } else if (egf_cmd->parsed()) {
            if (!in.family) throw InvalidArgument("cli", "egf needs a family (--family or a family file)");
            const auto u = family_egf(*in.family, primes.front(), order, EgfOptions{!g.unsafe});
            if (g.json) {
                std::cout << "[";
                for (std::size_t k = 0; k <= u.order(); ++k) std::cout << (k ? "," : "") << to_json(u[k]);
                std::cout << "]\n";
            } else {
                for (std::size_t k = 0; k <= u.order(); ++k) std::cout << "u_" << k << " = " << u[k].to_string() << "\n";
            }
        } else if (verify_cmd->parsed()) {
            return run_verify(in, primes, g);
        } else if (solutions_cmd->parsed()) {
            run_solutions(in, primes.front(), g);
        }
    } catch (const IntegrityAlarm& e) {
        std::cerr << "integrity alarm: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
