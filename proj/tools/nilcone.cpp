#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "nilcone/kostka.hpp"
#include "nilcone/serialize.hpp"
#include "nilcone/xi.hpp"

using namespace nilcone;

namespace {

bool plain_text() {
    const char* v = std::getenv("NO_COLOR");
    return v != nullptr && *v != '\0';
}

void title(const std::string& t) {
    if (plain_text())
        std::cout << t << "\n";
    else
        std::cout << "\033[1m" << t << "\033[0m\n";
}

[[noreturn]] void usage_error(const std::string& msg) {
    std::cerr << "usage error: " << msg << "\n";
    std::exit(2);
}

struct Options {
    std::string alpha;
    long long max_codim = 3;
    long long genus = 1;
    unsigned threads = 1;
    std::string format = "text";
    std::string hn_text;
    std::string lambda_text;
    std::string jordan_text;
    std::string gamma_text;
    int degree = 0;
    bool inverse = false;
    bool invert = false;
    bool block_diagonal = false;
    bool on_components = false;
    bool to_jordan = false;
    bool to_hn = false;
};

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (o.format == f)
            return;
    usage_error("format \"" + o.format + "\" is not supported by this command");
}

void run_hn(const Options& o) {
    auto strata = enumerate_hn(parse_class(o.alpha), o.max_codim, o.threads);
    if (o.format == "json") {
        json out = json::array();
        for (const auto& h : strata)
            out.push_back(json_hn(h));
        std::cout << out.dump() << "\n";
        return;
    }
    title("HN types of " + parse_class(o.alpha).str() + ", codim <= " +
          std::to_string(o.max_codim));
    for (const auto& h : strata)
        std::cout << "codim " << stratum_codim(h) << ": " << h.str() << "\n";
}

void run_order(const Options& o) {
    ClassVector alpha = parse_class(o.alpha);
    std::vector<std::string> labels;
    std::function<bool(std::size_t, std::size_t)> leq;
    std::vector<HNType> strata;
    std::vector<ComponentLabel> comps;
    if (o.on_components) {
        comps = enumerate_components(alpha, o.max_codim, o.threads);
        for (const auto& c : comps)
            labels.push_back(c.str());
        leq = [&](std::size_t i, std::size_t j) { return component_leq(comps[i], comps[j]); };
    } else {
        strata = enumerate_hn(alpha, o.max_codim, o.threads);
        for (const auto& h : strata)
            labels.push_back(h.str());
        leq = [&](std::size_t i, std::size_t j) { return stratum_leq(strata[i], strata[j]); };
    }
    if (o.format == "dot") {
        std::cout << export_hasse(labels, leq);
        return;
    }
    if (o.format == "json") {
        json rel = json::array();
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = 0; j < labels.size(); ++j)
                if (i != j && leq(i, j))
                    rel.push_back(json::array({i, j}));
        std::cout << json{{"nodes", labels}, {"leq", std::move(rel)}}.dump() << "\n";
        return;
    }
    title("closure order on " + std::string(o.on_components ? "components" : "strata") +
          " of " + alpha.str());
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = 0; j < labels.size(); ++j)
            if (i != j && leq(i, j))
                std::cout << labels[i] << " <= " << labels[j] << "\n";
}

void run_components(const Options& o) {
    auto comps = enumerate_components(parse_class(o.alpha), o.max_codim, o.threads);
    if (o.format == "json") {
        json out = json::array();
        for (const auto& c : comps)
            out.push_back(json_component(c));
        std::cout << out.dump() << "\n";
        return;
    }
    if (o.format == "csv") {
        std::cout << "hn,lambda\n";
        for (const auto& c : comps)
            std::cout << "\"" << c.hn.str() << "\",\"" << multipartition_str(c.lambda)
                      << "\"\n";
        return;
    }
    title("components of the nilpotent cone, " + parse_class(o.alpha).str() +
          ", codim <= " + std::to_string(o.max_codim));
    for (const auto& c : comps)
        std::cout << c.str() << "\n";
}

void run_cc_block(const Options& o) {
    if (o.hn_text.empty())
        usage_error("cc block needs --hn");
    CCBlock b = cc_block(hn_from_json(parse_json(o.hn_text)));
    if (o.format == "json") {
        std::cout << json_cc_block(b).dump() << "\n";
        return;
    }
    if (o.format == "csv") {
        std::cout << csv_matrix(b.matrix);
        return;
    }
    title("CC block of " + b.hn.str());
    std::cout << csv_matrix(b.matrix);
}

void run_cc_matrix(const Options& o) {
    TruncatedCCMatrix t = cc_truncated(parse_class(o.alpha), o.max_codim, o.threads);
    if (o.invert) {
        IntegerMatrix inv = invert_known_part(t, o.block_diagonal);
        if (o.format == "json")
            std::cout << json_matrix(inv).dump() << "\n";
        else
            std::cout << csv_matrix(inv);
        return;
    }
    if (o.format == "json") {
        std::cout << json_truncated(t).dump() << "\n";
        return;
    }
    if (o.format == "csv") {
        std::cout << csv_truncated(t);
        return;
    }
    title("truncated CC matrix, " + parse_class(o.alpha).str() + ", codim <= " +
          std::to_string(o.max_codim));
    std::cout << csv_truncated(t);
}

void run_kostka(const Options& o) {
    IntegerMatrix m = kostka_matrix(o.degree);
    if (o.inverse)
        m = invert_unitriangular(m);
    if (o.format == "json") {
        std::cout << json_matrix(m).dump() << "\n";
        return;
    }
    if (o.format == "csv") {
        std::cout << csv_matrix(m);
        return;
    }
    title((o.inverse ? "inverse Kostka matrix, d = " : "Kostka matrix, d = ") +
          std::to_string(o.degree));
    std::cout << csv_matrix(m);
}

void run_dict(const Options& o) {
    if (o.to_jordan == o.to_hn)
        usage_error("dict needs exactly one of --to-jordan / --to-hn");
    if (o.to_jordan) {
        if (o.hn_text.empty() || o.lambda_text.empty())
            usage_error("dict --to-jordan needs --hn and --lambda");
        ComponentLabel c(hn_from_json(parse_json(o.hn_text)),
                         multipartition_from_json(parse_json(o.lambda_text)));
        JordanType j = hn_to_jordan(c);
        if (o.format == "json")
            std::cout << json_jordan(j).dump() << "\n";
        else
            std::cout << j.str() << "\n";
        return;
    }
    if (o.jordan_text.empty() || o.alpha.empty())
        usage_error("dict --to-hn needs --jordan and --alpha");
    JordanType j{class_list_from_json(parse_json(o.jordan_text))};
    ComponentLabel c = jordan_to_hn(j, parse_class(o.alpha));
    if (o.format == "json")
        std::cout << json_component(c).dump() << "\n";
    else
        std::cout << c.str() << "\n";
}

void run_codim1(const Options& o) {
    auto h = codim_one_stratum(parse_class(o.alpha), o.genus);
    if (o.format == "json") {
        std::cout << (h ? json_hn(*h) : json()).dump() << "\n";
        return;
    }
    if (h)
        std::cout << h->str() << "\n";
    else
        std::cout << "absent\n";
}

void run_sl2(const Options& o) {
    if (o.gamma_text.empty() || o.hn_text.empty())
        usage_error("sl2 needs --gamma and --hn");
    json g = parse_json(o.gamma_text);
    if (!g.is_array() || g.size() != 2 || !g[0].is_array() || g[0].size() != 2 ||
        !g[1].is_array() || g[1].size() != 2)
        throw ParseError("gamma must be [[a,b],[c,d]]: " + o.gamma_text);
    UnimodularMatrix gamma(g[0][0].get<long long>(), g[0][1].get<long long>(),
                           g[1][0].get<long long>(), g[1][1].get<long long>());
    auto h = sl2_transport(gamma, hn_from_json(parse_json(o.hn_text)));
    if (o.format == "json") {
        std::cout << (h ? json_hn(*h) : json()).dump() << "\n";
        return;
    }
    if (h)
        std::cout << h->str() << "\n";
    else
        std::cout << "absent\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorial invariants of the global nilpotent cone "
                 "of an elliptic curve"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* cmd, bool with_alpha, bool with_codim) {
        cmd->add_option("--format", o.format, "json|csv|dot|text")->default_val("text");
        cmd->add_option("--threads", o.threads, "worker threads for enumeration");
        if (with_alpha)
            cmd->add_option("--alpha", o.alpha, "class \"r,d\"")->required();
        if (with_codim)
            cmd->add_option("--max-codim", o.max_codim, "stratum codimension bound")
                ->default_val(3);
    };

    auto* hn_cmd = app.add_subcommand("hn", "enumerate HN types");
    add_common(hn_cmd, true, true);

    auto* order_cmd = app.add_subcommand("order", "closure order / Hasse diagram");
    add_common(order_cmd, true, true);
    order_cmd->add_flag("--components", o.on_components,
                        "order component labels instead of strata");

    auto* comp_cmd = app.add_subcommand("components", "enumerate component labels");
    add_common(comp_cmd, true, true);

    auto* cc_cmd = app.add_subcommand("cc", "characteristic-cycle matrices");
    cc_cmd->require_subcommand(1);
    auto* ccb = cc_cmd->add_subcommand("block", "single-stratum block");
    add_common(ccb, false, false);
    ccb->add_option("--hn", o.hn_text, "HN type as JSON [[r,d],...]")->required();
    auto* ccm = cc_cmd->add_subcommand("matrix", "truncated global matrix");
    add_common(ccm, true, true);
    ccm->add_flag("--invert", o.invert, "invert the known part");
    ccm->add_flag("--block-diagonal", o.block_diagonal,
                  "allow inversion in the presence of unknowns");

    auto* kostka_cmd = app.add_subcommand("kostka", "Kostka matrix of a degree");
    add_common(kostka_cmd, false, false);
    kostka_cmd->add_option("--degree", o.degree, "partition weight d >= 1")->required();
    kostka_cmd->add_flag("--inverse", o.inverse, "emit the exact inverse");

    auto* dict_cmd = app.add_subcommand("dict", "HN <-> Jordan dictionary (rank <= 3)");
    add_common(dict_cmd, false, false);
    dict_cmd->add_flag("--to-jordan", o.to_jordan, "component label -> Jordan type");
    dict_cmd->add_flag("--to-hn", o.to_hn, "Jordan type -> component label");
    dict_cmd->add_option("--hn", o.hn_text, "HN type as JSON [[r,d],...]");
    dict_cmd->add_option("--lambda", o.lambda_text, "multipartition as JSON [[...],...]");
    dict_cmd->add_option("--jordan", o.jordan_text, "Jordan type as JSON [[r,d],...]");
    dict_cmd->add_option("--alpha", o.alpha, "class \"r,d\"");

    auto* codim1_cmd = app.add_subcommand("codim1", "the codimension-one stratum");
    add_common(codim1_cmd, true, false);
    codim1_cmd->add_option("--genus", o.genus, "curve genus (1 or >= 2)")->default_val(1);

    auto* sl2_cmd = app.add_subcommand("sl2", "transport an HN type by SL2(Z)");
    add_common(sl2_cmd, false, false);
    sl2_cmd->add_option("--gamma", o.gamma_text, "matrix as JSON [[a,b],[c,d]]");
    sl2_cmd->add_option("--hn", o.hn_text, "HN type as JSON [[r,d],...]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*hn_cmd) {
            require_format(o, {"json", "text"});
            run_hn(o);
        } else if (*order_cmd) {
            require_format(o, {"json", "dot", "text"});
            run_order(o);
        } else if (*comp_cmd) {
            require_format(o, {"json", "csv", "text"});
            run_components(o);
        } else if (*ccb) {
            require_format(o, {"json", "csv", "text"});
            run_cc_block(o);
        } else if (*ccm) {
            require_format(o, {"json", "csv", "text"});
            run_cc_matrix(o);
        } else if (*kostka_cmd) {
            require_format(o, {"json", "csv", "text"});
            run_kostka(o);
        } else if (*dict_cmd) {
            require_format(o, {"json", "text"});
            run_dict(o);
        } else if (*codim1_cmd) {
            require_format(o, {"json", "text"});
            run_codim1(o);
        } else if (*sl2_cmd) {
            require_format(o, {"json", "text"});
            run_sl2(o);
        }
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
