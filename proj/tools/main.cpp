#include "algden/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace algden;

namespace {

constexpr const char* kVersion = "algden 1.0.0";

struct Config {
    std::uint64_t seed = 0;
    int max_degree = 8;
    int effort = 1;
    std::string format = "structured";
};

void emit_header(const Config& cfg)
{
    std::cout << "# " << kVersion << " seed=" << cfg.seed
              << " effort=" << cfg.effort << " max-degree=" << cfg.max_degree
              << " format=" << cfg.format << "\n";
}

std::string tuple_record(const TupleQuery& q, const TupleCertificate& cert)
{
    std::string line = "c=" + q.lead.get_str() + " d=" + q.denom.get_str()
                       + " e=" + q.tail_gcd.get_str()
                       + " n=" + std::to_string(q.degree);
    if (cert.realizable) {
        line += " realizable=true";
        if (cert.witness) {
            line += " witness=" + poly_text(cert.witness->poly());
            if (q.degree >= 2)
                line += " eisenstein=" + cert.eisenstein_prime.get_str();
        }
    } else {
        line += " realizable=false reason=" + to_string(cert.violation);
        if (cert.violation == TupleViolation::prime_condition)
            line += " prime=" + cert.violating_prime.get_str();
    }
    return line;
}

std::string factored_ideal_text(const FractionalIdeal& I)
{
    auto f = factor_ideal(I);
    if (f.empty())
        return "(1)";
    std::string out;
    for (size_t i = 0; i < f.size(); ++i) {
        if (i)
            out += "*";
        out += prime_text(f[i].first);
        if (f[i].second != 1)
            out += "^" + std::to_string(f[i].second);
    }
    return out;
}

std::string divisors_text(const std::vector<Integer>& divs)
{
    std::string out = "[";
    for (size_t i = 0; i < divs.size(); ++i) {
        if (i)
            out += ",";
        out += divs[i].get_str();
    }
    return out + "]";
}

struct GammaSetup {
    FieldPtr M;
    ElementContext ctx;
    Subfield K;
};

GammaSetup setup_gamma(const std::string& field_spec,
                       const std::string& gamma_spec,
                       const std::string& subfield_spec, const Config& cfg)
{
    FieldPtr M = parse_field(field_spec, cfg.max_degree);
    FieldElement gamma = parse_element(M, gamma_spec);
    if (gamma.is_zero())
        throw std::invalid_argument("gamma must be nonzero");
    ElementContext ctx = make_context(gamma);
    FieldElement kappa = parse_element(M, subfield_spec);
    if (kappa.is_zero())
        throw std::invalid_argument("subfield generator must be nonzero");
    Subfield K = subfield_from_generator(kappa);
    return {M, std::move(ctx), std::move(K)};
}

int run_verify(const std::string& suite, const Config& cfg, int count)
{
    std::vector<SuiteResult> results;
    auto want = [&](const std::string& name) {
        return suite == "all" || suite == name;
    };
    if (want("dformula"))
        results.push_back(verify_dformula(cfg.seed + 1, count));
    if (want("tuples"))
        results.push_back(verify_tuples(12, 8));
    if (want("equivalences"))
        results.push_back(verify_equivalences(cfg.seed + 2, count));
    if (want("radicals"))
        results.push_back(verify_radicals(cfg.seed + 3, std::max(1, count / 5)));
    if (want("cross-field"))
        results.push_back(verify_cross_field(cfg.seed + 4, count));
    if (want("same-denom"))
        results.push_back(verify_same_denominator(cfg.seed + 5, count));
    if (want("membership"))
        results.push_back(verify_membership(cfg.seed + 6, count));
    if (want("genset"))
        results.push_back(verify_genset(cfg.seed + 7, std::max(1, count / 4)));
    if (results.empty()) {
        std::cerr << "unknown suite '" << suite
                  << "' (dformula, tuples, equivalences, radicals, "
                     "cross-field, same-denom, membership, genset, all)\n";
        return 1;
    }
    bool all_ok = true;
    for (const auto& r : results)
        for (const auto& c : r.checks) {
            std::cout << (c.pass ? "ok   " : "FAIL ") << r.suite << "/"
                      << c.name;
            if (!c.detail.empty())
                std::cout << "  [" << c.detail << "]";
            std::cout << "\n";
            if (!c.pass)
                all_ok = false;
        }
    return all_ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{std::string(kVersion)
                 + " - denominator invariants of algebraic numbers"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--seed", cfg.seed, "random seed for sampled suites")
        ->envname("ALGDEN_SEED");
    app.add_option("--max-degree", cfg.max_degree, "ambient degree cap")
        ->envname("ALGDEN_MAX_DEGREE");
    app.add_option("--effort", cfg.effort, "effort multiplier for searches")
        ->envname("ALGDEN_EFFORT");
    app.add_option("--format", cfg.format, "output format: structured|human")
        ->envname("ALGDEN_FORMAT")
        ->check(CLI::IsMember({"structured", "human"}));

    std::string poly_spec, field_spec, gamma_spec, gamma2_spec;
    std::string subfield_spec = "1";
    std::string alpha_spec, suite;
    std::vector<std::string> tuple_vals;
    bool with_oracle = false;
    int oracle_cap = 64;
    long factor_p = 0;
    int atlas_n = 2;
    long atlas_max_c = 4, atlas_max_d = 0, atlas_max_e = 0;
    int verify_count = 25;

    auto add_gamma_options = [&](CLI::App* cmd, bool with_subfield = true) {
        cmd->add_option("--field", field_spec,
                        "ambient field, e.g. \"Q[x]/(x^2+1)\"")
            ->required();
        cmd->add_option("--gamma", gamma_spec,
                        "element expression in x, e.g. \"1/(60+15*x)\"")
            ->required();
        if (with_subfield)
            cmd->add_option("--subfield", subfield_spec,
                            "generator of the subfield K (default 1 = Q)");
    };

    auto* inv_cmd =
        app.add_subcommand("invariants", "invariants of a minimal polynomial");
    inv_cmd->add_option("poly", poly_spec, "polynomial or coefficient list")
        ->required();

    auto* tuple_cmd = app.add_subcommand("tuple", "invariant tuple classifier");
    tuple_cmd->require_subcommand(1);
    auto* tcheck = tuple_cmd->add_subcommand("check", "is (c,d,e,n) realizable");
    tcheck->add_option("values", tuple_vals, "c d e n")->expected(4);
    auto* twitness =
        tuple_cmd->add_subcommand("witness", "construct a witness polynomial");
    twitness->add_option("values", tuple_vals, "c d e n")->expected(4);
    auto* tatlas = tuple_cmd->add_subcommand("atlas", "sweep a tuple range");
    tatlas->add_option("--n", atlas_n, "degree");
    tatlas->add_option("--max-c", atlas_max_c, "bound on c")->required();
    tatlas->add_option("--max-d", atlas_max_d, "bound on d (default max-c)");
    tatlas->add_option("--max-e", atlas_max_e, "bound on e (default max-c)");

    auto* field_cmd = app.add_subcommand("field", "number field data");
    field_cmd->require_subcommand(1);
    auto* finfo = field_cmd->add_subcommand("info", "integral basis and such");
    finfo->add_option("spec", field_spec, "e.g. \"Q[x]/(x^2+1)\"")->required();
    auto* ffactor = field_cmd->add_subcommand("factor", "prime splitting");
    ffactor->add_option("spec", field_spec, "field spec")->required();
    ffactor->add_option("-p,--prime", factor_p, "rational prime")->required();

    auto* xy_cmd = app.add_subcommand("xy", "denominator prime sets X and Y");
    add_gamma_options(xy_cmd);

    auto* member_cmd =
        app.add_subcommand("member", "membership of alpha in O_K[gamma]");
    add_gamma_options(member_cmd);
    member_cmd
        ->add_option("--alpha", alpha_spec,
                     "element of K, written in the ambient generator x")
        ->required();
    member_cmd->add_flag("--oracle", with_oracle, "run the witness oracle too");
    member_cmd->add_option("--oracle-bound", oracle_cap, "oracle degree cap");

    auto* ring_cmd = app.add_subcommand(
        "ring", "describe O_K[gamma] intersected with K as a localization");
    add_gamma_options(ring_cmd);

    auto* kernel_cmd =
        app.add_subcommand("kernel-ideal", "the ideal presenting O_K[gamma]");
    add_gamma_options(kernel_cmd);

    auto* cg_cmd = app.add_subcommand("classgroup", "class group of a field");
    cg_cmd->add_option("spec", field_spec, "field spec")->required();

    auto* genset_cmd =
        app.add_subcommand("genset", "finite generating set of gamma");
    add_gamma_options(genset_cmd, false);

    auto* sd_cmd = app.add_subcommand("same-denom",
                                      "same denominator ideal for two elements");
    sd_cmd->add_option("--field", field_spec, "ambient field")->required();
    sd_cmd->add_option("--gamma1", gamma_spec, "first element")->required();
    sd_cmd->add_option("--gamma2", gamma2_spec, "second element")->required();

    auto* local_cmd = app.add_subcommand(
        "local", "local ring classification at the primes over p");
    add_gamma_options(local_cmd);
    local_cmd->add_option("-p,--prime", factor_p, "rational prime")->required();

    auto* verify_cmd =
        app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite, "suite name or 'all'")->required();
    verify_cmd->add_option("--count", verify_count, "sample count");

    CLI11_PARSE(app, argc, argv);

    try {
        emit_header(cfg);

        if (*inv_cmd) {
            MinimalPolynomial f = normalize(parse_poly(poly_spec));
            Invariants inv = invariants(f);
            if (cfg.format == "human") {
                std::cout << "minimal polynomial " << poly_text(f.poly())
                          << ": c=" << inv.lead << " d=" << inv.denom
                          << " e=" << inv.tail_gcd << " n=" << inv.degree
                          << "\n";
            } else {
                std::cout << "poly=" << poly_text(f.poly())
                          << " c=" << inv.lead << " d=" << inv.denom
                          << " e=" << inv.tail_gcd << " n=" << inv.degree
                          << "\n";
            }
            return 0;
        }

        if (*tuple_cmd) {
            if (*tatlas) {
                AtlasBounds b;
                b.degree_min = b.degree_max = atlas_n;
                b.max_lead = atlas_max_c;
                b.max_denom = atlas_max_d;
                b.max_tail = atlas_max_e;
                atlas(b, [&](const TupleQuery& q, const TupleCertificate& c) {
                    std::cout << tuple_record(q, c) << "\n";
                });
                return 0;
            }
            TupleQuery q{Integer(tuple_vals[0]), Integer(tuple_vals[1]),
                         Integer(tuple_vals[2]), std::stoi(tuple_vals[3])};
            if (*tcheck) {
                std::cout << tuple_record(q, is_realizable(q)) << "\n";
            } else {
                std::cout << tuple_record(q, certify(q)) << "\n";
            }
            return 0;
        }

        if (*field_cmd) {
            FieldPtr K = parse_field(field_spec, cfg.max_degree);
            if (*finfo) {
                std::cout << "field=" << field_text(K)
                          << " degree=" << K->degree()
                          << " disc=" << K->discriminant()
                          << " index=" << K->index() << " signature=("
                          << K->real_embeddings() << ","
                          << K->complex_pairs() << ")";
                std::cout << " basis=[";
                for (int i = 0; i < K->degree(); ++i) {
                    if (i)
                        std::cout << ";";
                    std::vector<Rational> row(K->degree());
                    for (int j = 0; j < K->degree(); ++j)
                        row[j] = K->integral_basis().at(i, j);
                    std::cout << element_text(FieldElement{K, row});
                }
                std::cout << "]\n";
            } else {
                if (!is_prime(Integer(factor_p)))
                    throw std::invalid_argument("-p expects a prime");
                for (const auto& P : factor_prime(K, Integer(factor_p)))
                    std::cout << "prime=" << prime_text(P) << " e=" << P.ram
                              << " f=" << P.res_deg << " norm="
                              << pow(P.p, static_cast<unsigned long>(P.res_deg))
                              << "\n";
            }
            return 0;
        }

        if (*xy_cmd) {
            GammaSetup s = setup_gamma(field_spec, gamma_spec, subfield_spec, cfg);
            XYReport r = compute_xy(s.ctx, s.K);
            std::cout << "gamma=" << element_text(s.ctx.value)
                      << " field=" << field_text(s.M)
                      << " subfield=" << field_text(s.K.field)
                      << " subfield_gen=" << element_text(s.K.generator) << "\n";
            RatPoly rel(std::vector<Rational>{});
            std::cout << "relpoly=[";
            for (size_t i = 0; i < r.rel_coeffs.size(); ++i) {
                if (i)
                    std::cout << ";";
                std::cout << element_text(r.rel_coeffs[i]);
            }
            std::cout << "]\n";
            std::cout << "x=" << prime_list_text(r.x_set) << "\n";
            std::cout << "y=" << prime_list_text(r.y_set) << "\n";
            return 0;
        }

        if (*member_cmd) {
            GammaSetup s = setup_gamma(field_spec, gamma_spec, subfield_spec, cfg);
            FieldElement alpha_amb = parse_element(s.M, alpha_spec);
            auto alpha = from_ambient(s.K, alpha_amb);
            if (!alpha)
                throw std::invalid_argument("alpha does not lie in K");
            bool member = membership(s.ctx, s.K, *alpha);
            std::cout << "alpha=" << element_text(alpha_amb)
                      << " member=" << (member ? "true" : "false") << "\n";
            if (with_oracle) {
                auto r = membership_oracle(s.ctx, s.K, *alpha, oracle_cap);
                if (r.witness) {
                    std::cout << "oracle=member degree="
                              << r.witness->coeffs.size() - 1 << " coeffs=[";
                    for (size_t i = 0; i < r.witness->coeffs.size(); ++i) {
                        if (i)
                            std::cout << ";";
                        std::cout << element_text(
                            to_ambient(s.K, r.witness->coeffs[i]));
                    }
                    std::cout << "]\n";
                } else {
                    std::cout << "oracle=no_witness_found cap=" << r.cap
                              << "\n";
                }
            }
            return 0;
        }

        if (*ring_cmd) {
            GammaSetup s = setup_gamma(field_spec, gamma_spec, subfield_spec, cfg);
            RingDescription r = ring_description(s.ctx, s.K, cfg.effort);
            std::cout << "x=" << prime_list_text(r.x_set)
                      << " is_whole_ring=" << (r.is_whole_ring ? "true" : "false")
                      << " class_group=" << divisors_text(r.class_divisors)
                      << " h=" << r.class_order
                      << " pid=" << (r.is_pid ? "true" : "false") << "\n";
            return 0;
        }

        if (*kernel_cmd) {
            GammaSetup s = setup_gamma(field_spec, gamma_spec, subfield_spec, cfg);
            FractionalIdeal I = kernel_ideal(s.ctx, s.K);
            std::cout << "kernel=" << factored_ideal_text(I) << "\n";
            return 0;
        }

        if (*cg_cmd) {
            FieldPtr K = parse_field(field_spec, cfg.max_degree);
            ClassGroup g = class_group(K, cfg.effort);
            std::cout << "field=" << field_text(K) << " h=" << g.h
                      << " divisors=" << divisors_text(g.elementary_divisors)
                      << " generators=" << prime_list_text(g.generator_ideals)
                      << "\n";
            return 0;
        }

        if (*genset_cmd) {
            GammaSetup s = setup_gamma(field_spec, gamma_spec, "1", cfg);
            GenSetResult gs = generating_set(s.ctx, cfg.effort);
            for (const auto& f : gs.fields) {
                std::cout << "field=" << field_text(f.field.field)
                          << " gen=" << element_text(f.field.generator)
                          << " fresh=" << prime_list_text(f.fresh)
                          << " h=" << f.class_number
                          << " alpha=" << element_text(f.generator) << "\n";
            }
            std::cout << "S={";
            for (size_t i = 0; i < gs.set.size(); ++i) {
                if (i)
                    std::cout << ";";
                std::cout << element_text(gs.set[i]);
            }
            std::cout << "}\n";
            return 0;
        }

        if (*sd_cmd) {
            FieldPtr M = parse_field(field_spec, cfg.max_degree);
            FieldElement g1 = parse_element(M, gamma_spec);
            FieldElement g2 = parse_element(M, gamma2_spec);
            bool same = same_denominator(g1, g2);
            std::cout << "gamma1=" << element_text(g1)
                      << " gamma2=" << element_text(g2)
                      << " same_denominator=" << (same ? "true" : "false")
                      << "\n";
            return 0;
        }

        if (*local_cmd) {
            GammaSetup s = setup_gamma(field_spec, gamma_spec, subfield_spec, cfg);
            if (!is_prime(Integer(factor_p)))
                throw std::invalid_argument("-p expects a prime");
            Subfield adj = adjoin(s.ctx, s.K);
            for (const auto& P : factor_prime(s.K.field, Integer(factor_p)))
                for (const auto& Q : primes_above(s.K, adj, P)) {
                    LocalRing r = local_classify(s.ctx, s.K, adj, P, Q);
                    std::cout << "p=" << prime_text(P)
                              << " q=" << prime_text(Q) << " ring="
                              << (r == LocalRing::whole_field ? "whole_field"
                                                              : "integers")
                              << "\n";
                }
            return 0;
        }

        if (*verify_cmd)
            return run_verify(suite, cfg, verify_count);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const NotIrreducibleError& e) {
        std::cerr << "input error: " << e.what() << ", factor "
                  << poly_text(e.witness) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
