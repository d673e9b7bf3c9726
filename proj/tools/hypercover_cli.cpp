// hypercover_cli.cpp - command line front end: exact parameters, constructive
// covers, partition covers, Turan records, random instances, verification and
// batch tables. Exit codes: 0 success, 1 input error, 2 bound violation.
#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "hypercover/clique_cover.hpp"
#include "hypercover/exact_params.hpp"
#include "hypercover/hypergraph.hpp"
#include "hypercover/kcover.hpp"
#include "hypercover/matching_covers.hpp"

namespace hc = hypercover;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;

using Input = std::variant<hc::Hypergraph, hc::Graph>;

// Inputs: examples:<name>, graph:K<n>, graph:<gr1-file>, empty[:<n>,<r>],
// random:<n>,<r>,<p>,<seed>, or an HG1 file path.
Input resolve_input(const std::string& text) {
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts;
        std::istringstream in(s);
        std::string item;
        while (std::getline(in, item, sep)) parts.push_back(item);
        return parts;
    };
    if (text.rfind("examples:", 0) == 0) return hc::builtin_instance(text.substr(9));
    if (text.rfind("graph:", 0) == 0) {
        std::string rest = text.substr(6);
        if (rest.size() > 1 && rest[0] == 'K' && isdigit(static_cast<unsigned char>(rest[1])))
            return hc::Graph::complete(std::stoi(rest.substr(1)));
        std::ifstream in(rest);
        if (!in) throw hc::InputError("cannot open graph file: " + rest);
        return hc::parse_gr1(in);
    }
    if (text == "empty") return hc::Hypergraph(5, 5, {});
    if (text.rfind("empty:", 0) == 0) {
        auto parts = split(text.substr(6), ',');
        if (parts.size() != 2) throw hc::InputError("expected empty:<n>,<r>");
        return hc::Hypergraph(std::stoi(parts[0]), std::stoi(parts[1]), {});
    }
    if (text.rfind("random:", 0) == 0) {
        auto parts = split(text.substr(7), ',');
        if (parts.size() != 4) throw hc::InputError("expected random:<n>,<r>,<p>,<seed>");
        return hc::random_hypergraph(std::stoi(parts[0]), std::stoi(parts[1]),
                                     hc::parse_rational(parts[2]), std::stoull(parts[3]));
    }
    std::ifstream in(text);
    if (!in) throw hc::InputError("cannot open file: " + text);
    return hc::parse_hg1(in);
}

hc::Hypergraph need_hypergraph(const Input& in, const std::string& what) {
    if (!std::holds_alternative<hc::Hypergraph>(in))
        throw hc::InputError(what + " needs a hypergraph input");
    return std::get<hc::Hypergraph>(in);
}

hc::Graph need_graph(const Input& in, const std::string& what) {
    if (!std::holds_alternative<hc::Graph>(in))
        throw hc::InputError(what + " needs a graph input (use the graph: prefix)");
    return std::get<hc::Graph>(in);
}

void print_edge_line(std::ostream& out, const hc::Edge& e, const char* prefix = "") {
    out << prefix;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out << ' ';
        out << e[i];
    }
    out << '\n';
}

int run_params(const std::string& input, int m, std::ostream& out) {
    hc::Hypergraph h = need_hypergraph(resolve_input(input), "params");
    auto mr = hc::matching_number(h, m);
    auto cr = hc::cover_number(h, m);
    auto fr = hc::fractional_numbers(h, m);
    out << "nu=" << mr.value << " tau=" << cr.value << " nustar=" << hc::format_rational(fr.value)
        << '\n';
    out << "nu_witness:\n";
    for (int i : mr.witness) print_edge_line(out, h.edge(i));
    out << "tau_witness:\n";
    for (const hc::MSet& x : cr.witness) print_edge_line(out, x);
    return kExitOk;
}

int run_cover(const std::string& input, const std::string& mode, std::ostream& out) {
    hc::CoverCertificate cert;
    if (mode == "clique42") {
        cert = hc::cover_42_clique(need_graph(resolve_input(input), "cover --mode clique42"));
    } else {
        hc::Hypergraph h = need_hypergraph(resolve_input(input), "cover");
        if (mode == "weak") cert = hc::weak_cover(h);
        else if (mode == "r3") cert = hc::cover_r3(h);
        else if (mode == "r4") cert = hc::cover_r4(h);
        else if (mode == "general") cert = hc::cover_general(h);
        else throw hc::InputError("unknown cover mode: " + mode);
    }
    out << cert.transcript_text();
    return cert.verified ? kExitOk : kExitViolation;
}

int run_kcover(const std::string& input, int k, int l, int trials, std::uint64_t seed,
               std::ostream& out) {
    hc::Hypergraph h = need_hypergraph(resolve_input(input), "kcover");
    if (l > 0) {
        auto fams = hc::kcover_frankl_rodl(h, l, seed);
        for (const auto& f : fams) {
            out << "family=" << f.family_index << " size=" << f.cover.size()
                << " bound=" << hc::format_rational(f.size_bound)
                << " certified=" << (f.bound_certified ? 1 : 0) << '\n';
            for (int i : f.cover) print_edge_line(out, h.edge(i), "C: ");
        }
        return kExitOk;
    }
    if (k == 0) k = h.r() + 1;
    auto res = hc::kcover_best(h, k, trials, seed);
    out << "k=" << res.k << " size=" << res.cover.size()
        << " bound=" << hc::format_rational(res.size_bound)
        << " certified=" << (res.bound_certified ? 1 : 0) << " family=" << res.family_index << '\n';
    for (int i : res.cover) print_edge_line(out, h.edge(i), "C: ");
    return res.bound_certified ? kExitOk : kExitViolation;
}

int run_turan(int n, int k, int r, std::ostream& out) {
    int ex = hc::turan_number(n, r, k);
    int t = hc::covering_design_number(n, k, r);
    out << "ex(" << n << ',' << k << ',' << r << ")=" << ex << '\n';
    out << "T(" << n << ',' << k << ',' << r << ")=" << t << '\n';
    if (ex + t != static_cast<int>(hc::binomial(n, r))) {
        out << "identity violated\n";
        return kExitViolation;
    }
    return kExitOk;
}

int run_jstar(const std::string& input, int m, std::ostream& out) {
    hc::Hypergraph h = need_hypergraph(resolve_input(input), "jstar");
    auto rep = hc::jstar_bound_check(h, m);
    out << "tau=" << rep.tau << " nustar=" << hc::format_rational(rep.nustar)
        << " exbound=" << rep.ex_bound << " satisfied=" << (rep.satisfied ? 1 : 0) << '\n';
    return rep.satisfied ? kExitOk : kExitViolation;
}

int run_random(int n, int r, const std::string& p, std::uint64_t seed, std::ostream& out) {
    out << hc::serialize_hg1(hc::random_hypergraph(n, r, hc::parse_rational(p), seed));
    return kExitOk;
}

int run_verify(const std::string& input, const std::string& cert_path, int m,
               const std::string& bound_text, std::ostream& out) {
    hc::Hypergraph h = need_hypergraph(resolve_input(input), "verify");
    std::ifstream in(cert_path);
    if (!in) throw hc::InputError("cannot open certificate file: " + cert_path);
    hc::ParsedCover parsed = hc::parse_cover_transcript(in, m);
    if (!bound_text.empty()) parsed.bound = hc::parse_rational(bound_text);
    auto cert = hc::verify_cover(h, m, parsed.cover, parsed.bound);
    out << cert.transcript_text();
    return cert.verified ? kExitOk : kExitViolation;
}

// One job per line: "<input> --m <m>" runs the exact parameters and the cover
// construction matching the uniformity; '#' starts a comment.
int run_batch(const std::string& spec_path, std::ostream& out) {
    std::ifstream in(spec_path);
    if (!in) throw hc::InputError("cannot open batch spec: " + spec_path);
    std::string line;
    bool violation = false;
    bool any = false;
    hc::Rational max_ratio = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty() || trimmed[0] == '#') continue;
        std::istringstream ls(trimmed);
        std::string input, flag;
        int m = -1;
        ls >> input;
        while (ls >> flag) {
            if (flag == "--m") ls >> m;
            else throw hc::InputError("batch: unknown flag '" + flag + "' in: " + line);
        }
        hc::Hypergraph h = need_hypergraph(resolve_input(input), "batch");
        if (m < 0) m = h.r() - 1;
        auto mr = hc::matching_number(h, m);
        auto fr = hc::fractional_numbers(h, m);

        hc::CoverCertificate cert;
        if (m != h.r() - 1) {
            // no constructive schedule at this m; report the exact values only
            out << input << " m=" << m << " nu=" << mr.value
                << " nustar=" << hc::format_rational(fr.value) << '\n';
            any = true;
            continue;
        }
        switch (h.r()) {
            case 3: cert = hc::cover_r3(h); break;
            case 4: cert = hc::cover_r4(h); break;
            default: cert = h.r() >= 5 ? hc::cover_general(h) : hc::weak_cover(h); break;
        }
        hc::Rational ratio = mr.value > 0 ? fr.value / mr.value : hc::Rational(0);
        if (ratio > max_ratio) max_ratio = ratio;
        out << input << " m=" << m << " nu=" << mr.value
            << " nustar=" << hc::format_rational(fr.value)
            << " cover=" << hc::format_rational(cert.size)
            << " bound=" << hc::format_rational(cert.bound)
            << " margin=" << hc::format_rational(cert.bound - cert.size)
            << " ok=" << (cert.verified ? 1 : 0) << '\n';
        any = true;
        if (!cert.verified) violation = true;
    }
    if (any) out << "max_taustar_over_nu=" << hc::format_rational(max_ratio) << '\n';
    return violation ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact matchings, covers and their fractional relaxations in uniform hypergraphs"};
    app.require_subcommand(1);

    std::string input, mode, p = "1/2", cert_path, spec_path, bound_text;
    int m = 1, n = 0, r = 0, k = 0, l = 0, trials = 100;
    std::uint64_t seed = 0;

    auto* params = app.add_subcommand("params", "exact nu, tau and nu* with witnesses");
    params->add_option("input", input)->required();
    params->add_option("--m", m)->required();

    auto* cover = app.add_subcommand("cover", "constructive cover certificate");
    cover->add_option("input", input)->required();
    cover->add_option("--mode", mode)->required()
        ->check(CLI::IsMember({"weak", "r3", "r4", "general", "clique42"}));

    auto* kcover = app.add_subcommand("kcover", "clique cover from seeded partitions");
    kcover->add_option("input", input)->required();
    kcover->add_option("--k", k);
    kcover->add_option("--l", l);
    kcover->add_option("--trials", trials);
    kcover->add_option("--seed", seed);

    auto* turan = app.add_subcommand("turan", "Turan and covering numbers");
    turan->add_option("--n", n)->required();
    turan->add_option("--k", k)->required();
    turan->add_option("--r", r)->required();

    auto* jstar = app.add_subcommand("jstar", "tau <= ex * nu* check");
    jstar->add_option("input", input)->required();
    jstar->add_option("--m", m)->required();

    auto* random = app.add_subcommand("random", "seeded random hypergraph in HG1");
    random->add_option("--n", n)->required();
    random->add_option("--r", r)->required();
    random->add_option("--p", p)->required();
    random->add_option("--seed", seed);

    auto* verify = app.add_subcommand("verify", "check a cover transcript against an instance");
    verify->add_option("input", input)->required();
    verify->add_option("cert", cert_path)->required();
    verify->add_option("--m", m)->required();
    verify->add_option("--bound", bound_text, "override the transcript's bound (p/q)");

    auto* batch = app.add_subcommand("batch", "table of parameters and cover margins");
    batch->add_option("spec", spec_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (params->parsed()) return run_params(input, m, std::cout);
        if (cover->parsed()) return run_cover(input, mode, std::cout);
        if (kcover->parsed()) return run_kcover(input, k, l, trials, seed, std::cout);
        if (turan->parsed()) return run_turan(n, k, r, std::cout);
        if (jstar->parsed()) return run_jstar(input, m, std::cout);
        if (random->parsed()) return run_random(n, r, p, seed, std::cout);
        if (verify->parsed()) return run_verify(input, cert_path, m, bound_text, std::cout);
        if (batch->parsed()) return run_batch(spec_path, std::cout);
    } catch (const hc::TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << '\n';
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
