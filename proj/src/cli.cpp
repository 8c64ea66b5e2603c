#include "uglov/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "uglov/io.hpp"

namespace uglov {

namespace {

int parse_int(const std::string& text, const char* what) {
    int value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (!text.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
        throw UsageError(std::string("bad ") + what + " '" + text + "'");
    return value;
}

std::pair<int, int> parse_pair(const std::string& text, const char* what) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError(std::string(what) + " must look like a,b");
    return {parse_int(text.substr(0, comma), what), parse_int(text.substr(comma + 1), what)};
}

std::string charge_text(const Charge& s) { return "(" + std::to_string(s.s1) + "," + std::to_string(s.s2) + ")"; }

Json header(const RunConfig& cfg) {
    return Json{{"e", to_string(cfg.e)}, {"charge", to_json(cfg.charge)}, {"n", cfg.n}};
}

// Runs fn over items on cfg.workers threads; results keep the item order.
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, int workers, Fn fn) {
    using R = decltype(fn(items.front()));
    std::vector<std::optional<R>> slots(items.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) slots[i] = fn(items[i]);
    };
    const int count = std::max(1, std::min<int>(workers, static_cast<int>(items.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < count; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    std::vector<R> out;
    out.reserve(items.size());
    for (auto& slot : slots) out.push_back(std::move(*slot));
    return out;
}

std::vector<Bipartition> uglov_up_to(const RunConfig& cfg) {
    std::vector<Bipartition> out;
    for (const auto& layer : enumerate_uglov_layers(cfg.n, cfg.params())) out.insert(out.end(), layer.begin(), layer.end());
    return out;
}

struct Outcome {
    bool pass = false;
    Json report;
    std::string line;
};

int emit(const RunConfig& cfg, const std::string& mode, const std::vector<Outcome>& outcomes, std::ostream& out) {
    std::size_t failed = 0;
    Json bad = Json::array();
    for (const Outcome& o : outcomes) {
        if (o.pass) continue;
        ++failed;
        bad.push_back(o.report);
    }
    if (cfg.format == OutputFormat::json) {
        Json doc = header(cfg);
        doc["mode"] = mode;
        doc["checked"] = outcomes.size();
        doc["failed"] = failed;
        doc["counterexamples"] = bad;
        doc["pass"] = failed == 0;
        out << doc.dump(2) << '\n';
    } else {
        for (const Outcome& o : outcomes)
            if (!o.pass) out << "FAIL " << o.line << '\n';
        out << mode << " e=" << to_string(cfg.e) << " s=" << charge_text(cfg.charge) << " n<=" << cfg.n
            << ": checked " << outcomes.size() << ", failed " << failed << '\n';
    }
    return failed == 0 ? kExitPass : kExitCounterexample;
}

}  // namespace

Modulus parse_modulus(const std::string& text) {
    if (text == "inf" || text == "infinity") return Modulus::infinite();
    const int e = parse_int(text, "e");
    if (e < 2) throw UsageError("e must be at least 2 or inf");
    return Modulus::finite(e);
}

Charge parse_charge(const std::string& text) {
    const auto [s1, s2] = parse_pair(text, "charge");
    return {s1, s2};
}

ContentWindow parse_window(const std::string& text) {
    const auto [lo, hi] = parse_pair(text, "window");
    if (lo > hi) throw UsageError("window must satisfy lo <= hi");
    return {lo, hi};
}

OutputFormat parse_format(const std::string& text) {
    if (text == "json") return OutputFormat::json;
    if (text == "text") return OutputFormat::text;
    if (text == "dot") return OutputFormat::dot;
    throw UsageError("unknown format '" + text + "'");
}

VerifyMode parse_verify_mode(const std::string& text) {
    if (text == "forward") return VerifyMode::forward;
    if (text == "converse") return VerifyMode::converse;
    if (text == "corollary") return VerifyMode::corollary;
    if (text == "propb") return VerifyMode::propb;
    if (text == "psi-nature") return VerifyMode::psi_nature;
    throw UsageError("unknown verify mode '" + text + "'");
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n < 0) throw UsageError("n must be nonnegative");
    const CrystalParams p = cfg.params();
    if (cfg.format == OutputFormat::dot) {
        write_crystal_dot(out, cfg.n, p);
        return kExitPass;
    }
    const auto set = enumerate_uglov(cfg.n, p);
    if (cfg.format == OutputFormat::json) {
        Json doc = header(cfg);
        Json list = Json::array();
        for (const Bipartition& bp : set) list.push_back(to_json(bp));
        doc["count"] = set.size();
        doc["bipartitions"] = list;
        out << doc.dump(2) << '\n';
    } else {
        for (const Bipartition& bp : set) out << to_string(bp) << '\n';
        out << "count: " << set.size() << '\n';
    }
    return kExitPass;
}

int cmd_verify(const RunConfig& cfg, VerifyMode mode, std::ostream& out) {
    if (cfg.n < 0) throw UsageError("n must be nonnegative");
    if (cfg.format == OutputFormat::dot) throw UsageError("verify reports are json or text");
    const CrystalParams p = cfg.params();
    const bool needs_finite = mode != VerifyMode::psi_nature;
    if (needs_finite && !cfg.e.is_finite()) throw UsageError("this verification needs a finite e");

    if (mode == VerifyMode::converse) {
        std::vector<int> ranks;
        for (int k = 1; k <= cfg.n; ++k) ranks.push_back(k);
        const auto outcomes = parallel_map(ranks, cfg.workers, [&](int k) {
            const ConverseReport r = verify_djm_converse(k, p);
            return Outcome{r.pass(), to_json(r),
                           "rank " + std::to_string(k) + ": " + std::to_string(r.counterexamples.size()) +
                               " counterexamples, maxima cover Uglov set: " + (r.maxima_cover_uglov ? "yes" : "no")};
        });
        return emit(cfg, "converse", outcomes, out);
    }

    const auto items = uglov_up_to(cfg);
    std::function<Outcome(const Bipartition&)> check;
    std::string name;
    switch (mode) {
        case VerifyMode::forward:
            name = "forward";
            check = [&](const Bipartition& bp) {
                const DjmReport r = verify_djm_forward(bp, p);
                return Outcome{r.pass, to_json(r), to_string(bp) + ": " + r.message};
            };
            break;
        case VerifyMode::corollary:
            name = "corollary";
            check = [&](const Bipartition& bp) {
                const CorollaryReport r = verify_djm_corollary(bp, p);
                return Outcome{r.pass, to_json(r), to_string(bp) + ": " + r.message};
            };
            break;
        case VerifyMode::propb:
            name = "propb";
            check = [&](const Bipartition& bp) {
                const PropbReport r = propb_checks(bp, p);
                return Outcome{r.pass, to_json(r), to_string(bp) + ": " + r.message};
            };
            break;
        case VerifyMode::psi_nature: {
            name = "psi-nature";
            const MovePath path(cfg.charge, {ChargeMove::sigma1}, cfg.e);
            check = [&, path](const Bipartition& bp) {
                const Bipartition image = psi(bp, path, cfg.e);
                const bool ok = psi_nature_check(bp, image, path.start(), path.end());
                Json report{{"bp", to_json(bp)}, {"image", to_json(image)}, {"target", to_json(path.end())}, {"pass", ok}};
                return Outcome{ok, report, to_string(bp) + " -> " + to_string(image) + ": forbidden nature transition"};
            };
            break;
        }
        case VerifyMode::converse:
            break;
    }
    return emit(cfg, name, parallel_map(items, cfg.workers, check), out);
}

int cmd_show(const RunConfig& cfg, const Bipartition& bp, const std::string& what, std::ostream& out) {
    const CrystalParams p = cfg.params();
    const bool json = cfg.format == OutputFormat::json;
    if (cfg.format == OutputFormat::dot) throw UsageError("show renders json or text");

    if (what == "natures" || what == "boundary") {
        const ContentWindow window = cfg.window.value_or(active_window(bp, cfg.charge));
        if (what == "natures") {
            const NatureTable table = nature_table(bp, cfg.charge, window);
            if (json) {
                Json doc = nature_table_json(table);
                doc["bp"] = to_json(bp);
                out << doc.dump(2) << '\n';
            } else {
                out << render_nature_table(bp, table);
            }
        } else {
            const BoundarySeq seq = boundary_sequence(bp, cfg.charge, window);
            if (json) {
                Json nodes = Json::array();
                for (const ExtNode& node : seq) nodes.push_back(to_json(node));
                out << Json{{"bp", to_json(bp)}, {"window", Json::array({window.lo, window.hi})}, {"boundary", nodes}}.dump(2)
                    << '\n';
            } else {
                for (const ExtNode& node : seq) out << to_string(node) << " content " << content(node, cfg.charge) << '\n';
            }
        }
        return kExitPass;
    }

    if (!is_uglov(bp, p)) {
        std::string msg = to_string(bp) + " fails is_uglov at e=" + to_string(cfg.e) + ", s=" + charge_text(cfg.charge);
        if (cfg.e.is_finite() && in_fundamental_domain(cfg.charge, cfg.e)) msg += " (is_flotw is false as well)";
        throw UsageError(msg);
    }

    if (what == "adm") {
        if (!cfg.e.is_finite()) throw UsageError("the admissible sequence needs a finite e");
        const ResidueSeq seq = adm(bp, p);
        if (json) {
            out << Json{{"bp", to_json(bp)}, {"adm", seq}}.dump(2) << '\n';
        } else {
            out << join_residues(seq) << '\n';
        }
        return kExitPass;
    }
    if (what.rfind("psi:", 0) == 0) {
        const Charge target = parse_charge(what.substr(4));
        const MovePath path = path_between(cfg.charge, target, cfg.e);
        const Bipartition image = psi(bp, path, cfg.e);
        if (json) {
            out << Json{{"bp", to_json(bp)},
                        {"from", to_json(cfg.charge)},
                        {"to", to_json(target)},
                        {"path", to_json(path)},
                        {"image", to_json(image)}}
                       .dump(2)
                << '\n';
        } else {
            out << to_string(image) << '\n';
        }
        return kExitPass;
    }
    throw UsageError("unknown show target '" + what + "'");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Uglov bipartitions, crystal isomorphisms and admissible sequences"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string e_text = "3", charge_text_opt = "0,0", format_text = "text", window_text;
    int n = 0, workers = 1;
    app.add_option("--e", e_text, "e >= 2, or inf")->capture_default_str();
    app.add_option("--charge", charge_text_opt, "charge s1,s2")->capture_default_str();
    app.add_option("--n", n, "rank (bound)")->capture_default_str();
    app.add_option("--format", format_text, "json, text or dot")->capture_default_str();
    app.add_option("--workers", workers, "worker threads for sweeps")->capture_default_str();
    app.add_option("--window", window_text, "content window lo,hi for show");

    auto* enumerate = app.add_subcommand("enumerate", "list Uglov bipartitions of rank n (dot: crystal graph up to n)");
    std::string mode_text = "forward";
    auto* verify = app.add_subcommand("verify", "run a verification sweep up to rank n");
    verify->add_option("--mode", mode_text, "forward, converse, corollary, propb, psi-nature")->capture_default_str();
    std::string what, bp_text;
    auto* show = app.add_subcommand("show", "render one bipartition");
    show->add_option("what", what, "natures, boundary, adm or psi:s1,s2")->required();
    show->add_option("bipartition", bp_text, "dotted form such as 6.1,2.2; \"-\" marks an empty component");

    // A bipartition with an empty first component ("-,1") looks like a flag to CLI11,
    // so such tokens are pulled out before parsing and handed back as the positional.
    std::vector<std::string> args;
    std::string dash_bp;
    for (int i = argc - 1; i >= 1; --i) {
        const std::string token = argv[i];
        if (token.rfind("-,", 0) == 0 && dash_bp.empty()) {
            dash_bp = token;
        } else {
            args.push_back(token);
        }
    }

    try {
        app.parse(args);
        if (!dash_bp.empty()) {
            if (!*show || !bp_text.empty()) throw CLI::ExtrasError({dash_bp});
            bp_text = dash_bp;
        }
        if (*show && bp_text.empty()) throw CLI::RequiredError("bipartition");
    } catch (const CLI::Success& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    try {
        RunConfig cfg;
        cfg.e = parse_modulus(e_text);
        cfg.charge = parse_charge(charge_text_opt);
        cfg.n = n;
        cfg.format = parse_format(format_text);
        if (workers < 1) throw UsageError("workers must be positive");
        cfg.workers = workers;
        if (!window_text.empty()) cfg.window = parse_window(window_text);

        if (*enumerate) return cmd_enumerate(cfg, out);
        if (*verify) return cmd_verify(cfg, parse_verify_mode(mode_text), out);
        Bipartition bp;
        try {
            bp = parse_bipartition(bp_text);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return cmd_show(cfg, bp, what, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace uglov
