#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "matroidlab/branch_decomposition.hpp"
#include "matroidlab/errors.hpp"
#include "matroidlab/io.hpp"
#include "matroidlab/verify.hpp"

using namespace matroidlab;
using nlohmann::json;

namespace {

int ground_cap() {
    int cap = max_ground_size;
    if (const char* env = std::getenv("MATROIDLAB_MAX_N")) {
        try {
            cap = std::min(cap, std::stoi(env));
        } catch (...) {
            throw std::runtime_error("MATROIDLAB_MAX_N is not an integer");
        }
    }
    return cap;
}

subset parse_set(const matroid& m, const std::string& csv) {
    std::vector<int> labels;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        std::string tok = csv.substr(pos, comma - pos);
        if (!tok.empty()) labels.push_back(std::stoi(tok));
        pos = comma + 1;
    }
    return m.indices_of(labels);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact matroid computations: connectivity, tangles, branch width, removal search"};
    app.require_subcommand(1);

    std::string file, nfile, set_csv, suite = "all";
    int order = 0, k = 1, max_n = 8;
    unsigned seed = 1;
    bool oracle = false;

    CLI::App* c_rank = app.add_subcommand("rank", "rank of a subset");
    c_rank->add_option("file", file)->required();
    c_rank->add_option("--set", set_csv, "comma-separated element labels")->required();

    CLI::App* c_lambda = app.add_subcommand("lambda", "connectivity of a subset");
    c_lambda->add_option("file", file)->required();
    c_lambda->add_option("--set", set_csv)->required();

    CLI::App* c_bw = app.add_subcommand("bw", "branch width with decomposition cross-check");
    c_bw->add_option("file", file)->required();

    CLI::App* c_tangles = app.add_subcommand("tangles", "enumerate tangles of one order");
    c_tangles->add_option("file", file)->required();
    c_tangles->add_option("--order", order)->required();

    CLI::App* c_fans = app.add_subcommand("fans", "maximal fans");
    c_fans->add_option("file", file)->required();

    CLI::App* c_minor = app.add_subcommand("minor", "exact minor search");
    c_minor->add_option("file", file)->required();
    c_minor->add_option("--minor", nfile)->required();

    CLI::App* c_split = app.add_subcommand("splitter", "single-element removal keeping a minor");
    c_split->add_option("file", file)->required();
    c_split->add_option("--minor", nfile)->required();

    CLI::App* c_remove = app.add_subcommand("remove", "k-element removal set search");
    c_remove->add_option("file", file)->required();
    c_remove->add_option("--minor", nfile)->required();
    c_remove->add_option("--k", k)->required();
    c_remove->add_flag("--oracle", oracle, "cross-check with the exhaustive oracle");

    CLI::App* c_verify = app.add_subcommand("verify", "run the structural check suites");
    c_verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"core", "connectivity", "tangle", "removal", "all"}));
    c_verify->add_option("--max-n", max_n)->check(CLI::Range(1, 12));
    c_verify->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    try {
        int cap = ground_cap();
        if (c_rank->parsed()) {
            matroid m = io::load_matroid_file(file, cap);
            subset s = parse_set(m, set_csv);
            emit({{"command", "rank"}, {"set", io::labels_json(m, s)}, {"rank", m.rank(s)}});
            return 0;
        }
        if (c_lambda->parsed()) {
            matroid m = io::load_matroid_file(file, cap);
            subset s = parse_set(m, set_csv);
            emit({{"command", "lambda"}, {"set", io::labels_json(m, s)}, {"lambda", lambda(m, s)}});
            return 0;
        }
        if (c_bw->parsed()) {
            matroid m = io::load_matroid_file(file, std::min(cap, 12));
            int bw = branch_width(m);
            branch_decomposition bd = branch_width_by_decomposition(m);
            emit({{"command", "bw"},
                  {"branch_width", bw},
                  {"decomposition_width", bd.width},
                  {"decomposition", io::decomposition_to_json(m, bd.root)}});
            if (bw != bd.width) {
                std::cerr << "branch width and decomposition width disagree\n";
                return 1;
            }
            return 0;
        }
        if (c_tangles->parsed()) {
            matroid m = io::load_matroid_file(file, std::min(cap, 12));
            std::vector<tangle> all = enumerate_tangles(m, order);
            json arr = json::array();
            for (const tangle& t : all) arr.push_back(io::tangle_to_json(t));
            emit({{"command", "tangles"}, {"order", order}, {"count", all.size()}, {"tangles", arr}});
            return 0;
        }
        if (c_fans->parsed()) {
            matroid m = io::load_matroid_file(file, cap);
            json arr = json::array();
            for (const fan& f : find_fans(m)) {
                json elems = json::array();
                for (int e : f.elements) elems.push_back(m.label_of(e));
                arr.push_back({{"elements", elems},
                               {"starts_with", f.starts_with_triangle ? "triangle" : "triad"}});
            }
            emit({{"command", "fans"}, {"fans", arr}});
            return 0;
        }
        if (c_minor->parsed()) {
            matroid m = io::load_matroid_file(file, cap);
            matroid n = io::load_matroid_file(nfile, cap);
            auto spec = has_minor(m, n);
            json out = {{"command", "minor"}, {"found", spec.has_value()}};
            if (spec) {
                out["contract"] = io::labels_json(m, spec->contract);
                out["delete"] = io::labels_json(m, spec->del);
            }
            emit(out);
            return 0;
        }
        if (c_split->parsed()) {
            matroid m = io::load_matroid_file(file, std::min(cap, 12));
            matroid n = io::load_matroid_file(nfile, cap);
            auto exact = splitter_check(m, n);
            json out = {{"command", "splitter"}};
            out["exact"] = nullptr;
            if (exact)
                out["exact"] = {{"element", m.label_of(exact->element)}, {"op", to_string(exact->op)}};
            if (m.size() <= 12) {
                auto iso = exact ? exact : splitter_check_isomorphic(m, n);
                out["isomorphic"] = nullptr;
                if (iso)
                    out["isomorphic"] = {{"element", m.label_of(iso->element)},
                                         {"op", to_string(iso->op)}};
            }
            emit(out);
            return exact ? 0 : 1;
        }
        if (c_remove->parsed()) {
            matroid m = io::load_matroid_file(file, std::min(cap, 12));
            matroid n = io::load_matroid_file(nfile, cap);
            auto spec = has_minor(m, n);
            if (!spec) throw std::runtime_error("the given minor is not an exact minor of the matroid");
            auto t = max_order_tangle(m);
            if (!t) throw std::runtime_error("the matroid has no tangle of positive order");
            removal_outcome out = find_removal_set({m, *t, *spec, k});
            json j = {{"command", "remove"}, {"k", k}, {"tangle_order", t->order}};
            if (out.found) {
                j["status"] = "found";
                j["set"] = io::labels_json(m, out.result.set);
                j["op"] = to_string(out.result.op);
            } else {
                j["status"] = "budget-exhausted";
                j["note"] = out.note;
            }
            if (oracle) {
                auto ground = brute_force_oracle(m, *spec, k);
                j["oracle_confirms"] = ground.has_value();
                if (ground) j["oracle"] = io::removal_result_to_json(m, *ground);
                if (out.found && !ground) {
                    emit(j);
                    std::cerr << "oracle found no removal set of the same size\n";
                    return 1;
                }
            }
            emit(j);
            return 0;
        }
        if (c_verify->parsed()) {
            verify_options opt;
            opt.seed = seed;
            opt.max_n = std::min(max_n, std::min(cap, 12));
            opt.core = suite == "all" || suite == "core";
            opt.connectivity = suite == "all" || suite == "connectivity";
            opt.tangle = suite == "all" || suite == "tangle";
            opt.removal = suite == "all" || suite == "removal";
            std::vector<check_result> results = run_verify(opt);
            json arr = json::array();
            long long violations = 0;
            for (const check_result& c : results) {
                arr.push_back({{"name", c.name},
                               {"instances", c.instances},
                               {"cells", c.cells},
                               {"violations", c.violations},
                               {"status", c.violations == 0 ? "pass" : "fail"},
                               {"detail", c.detail}});
                violations += c.violations;
                std::cerr << (c.violations == 0 ? "pass  " : "FAIL  ") << c.name << "  (" << c.cells
                          << " cells)\n";
            }
            emit({{"command", "verify"},
                  {"suite", suite},
                  {"seed", seed},
                  {"max_n", opt.max_n},
                  {"checks", arr},
                  {"all_pass", violations == 0}});
            return violations == 0 ? 0 : 1;
        }
    } catch (const invariant_violation& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
