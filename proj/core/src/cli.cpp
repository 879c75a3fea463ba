#include "hds/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hds/generate.hpp"
#include "hds/io.hpp"

namespace hds {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
    out << text << '\n';
}

int exit_code(Answer answer) {
    switch (answer) {
    case Answer::Yes: return kExitYes;
    case Answer::No: return kExitNo;
    case Answer::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

double millis_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

struct Decision {
    Answer answer;
    std::string document;
    std::string reason;
};

Decision decide(const InstanceFile& file, std::uint64_t budget, int k_override) {
    return std::visit(
        [&](const auto& inst) -> Decision {
            using T = std::decay_t<decltype(inst)>;
            if constexpr (std::is_same_v<T, DegSeqInstance>) {
                const int k = k_override != 0 ? k_override : inst.k;
                if (k == 2) {
                    const auto start = std::chrono::steady_clock::now();
                    auto realization = eg_check(inst.d) ? hh_realize(inst.d) : std::nullopt;
                    const Answer answer = realization ? Answer::Yes : Answer::No;
                    return {answer, serialize_graph_outcome(answer, realization, millis_since(start)),
                            ""};
                }
                auto outcome = decide_degseq(inst.d, budget);
                return {outcome.answer, serialize_outcome(outcome), outcome.reason};
            } else if constexpr (std::is_same_v<T, ZeroWeightInstance>) {
                auto outcome = decide_zero(inst, budget);
                return {outcome.answer, serialize_outcome(outcome), outcome.reason};
            } else {
                auto outcome = decide_partition(inst, budget);
                return {outcome.answer, serialize_outcome(outcome), outcome.reason};
            }
        },
        file.instance);
}

int run_decide_batch(const std::string& dir, unsigned jobs, std::uint64_t budget, int k,
                     std::ostream& out, std::ostream& err) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());

    std::vector<nlohmann::ordered_json> results(files.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (std::size_t t = next++; t < files.size(); t = next++) {
            nlohmann::ordered_json row;
            row["file"] = files[t].filename().string();
            try {
                const Decision d = decide(parse_instance(read_file(files[t].string())), budget, k);
                const auto doc = nlohmann::ordered_json::parse(d.document);
                for (const auto& [key, value] : doc.items()) row[key] = value;
            } catch (const Error& e) {
                row["error"] = e.what();
                failed = true;
            }
            results[t] = std::move(row);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    nlohmann::ordered_json doc;
    doc["results"] = std::move(results);
    out << doc.dump() << '\n';
    if (failed) {
        err << "error: some instances could not be processed\n";
        return kExitUsage;
    }
    return 0;
}

nlohmann::ordered_json verify_document(bool valid, const std::string& defect,
                                       const std::string& reason) {
    nlohmann::ordered_json doc;
    doc["valid"] = valid;
    doc["defect"] = valid ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(defect);
    doc["reason"] = valid ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(reason);
    return doc;
}

// Checks a certificate against any of the three problems. For the restricted
// problems the degree target is c (resp. the all-ones vector) and each triple
// must additionally lie in the feasible set.
nlohmann::ordered_json verify(const InstanceFile& file, const std::string& certificate_text) {
    return std::visit(
        [&](const auto& inst) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(inst)>;
            if constexpr (std::is_same_v<T, DegSeqInstance>) {
                if (inst.k == 2) {
                    const Graph g = parse_graph_certificate(certificate_text, inst.n());
                    for (std::size_t e = 0; e < g.edges.size(); ++e) {
                        auto [i, j] = g.edges[e];
                        if (i < 0 || j <= i || j >= inst.n()) {
                            return verify_document(false, "invalid_triple", "edge out of range");
                        }
                        if (e > 0 && !(g.edges[e - 1] < g.edges[e])) {
                            return verify_document(false, "not_canonical",
                                                   "edges not strictly increasing");
                        }
                    }
                    if (!(graph_degrees(g) == inst.d)) {
                        return verify_document(false, "degree_mismatch",
                                               "graph degrees differ from d");
                    }
                    return verify_document(true, "", "");
                }
                const Hypergraph h = parse_certificate(certificate_text, inst.n());
                const auto check = verify_certificate(h, inst.d);
                return verify_document(check.ok(), to_string(check.defect), check.detail);
            } else {
                const Hypergraph h = parse_certificate(certificate_text, inst.n());
                DegreeSequence target;
                if constexpr (std::is_same_v<T, ZeroWeightInstance>) {
                    target = inst.c;
                } else {
                    target = DegreeSequence(std::vector<Int>(static_cast<std::size_t>(inst.n()), 1));
                }
                const auto check = verify_certificate(h, target);
                if (!check) return verify_document(false, to_string(check.defect), check.detail);
                for (const auto& x : h.edges) {
                    bool feasible;
                    if constexpr (std::is_same_v<T, ZeroWeightInstance>) {
                        feasible = weighted_value(inst.w, x) == 0;
                    } else {
                        feasible = partition_value(inst, x) == inst.b;
                    }
                    if (!feasible) {
                        return verify_document(false, "infeasible_triple",
                                               "triple (" + std::to_string(x.i) + "," +
                                                   std::to_string(x.j) + "," + std::to_string(x.k) +
                                                   ") is outside the feasible set");
                    }
                }
                return verify_document(true, "", "");
            }
        },
        file.instance);
}

bool oracle(const InstanceFile& file) {
    return std::visit(
        [](const auto& inst) -> bool {
            using T = std::decay_t<decltype(inst)>;
            if constexpr (std::is_same_v<T, DegSeqInstance>) {
                return inst.k == 2 ? graph_bruteforce(inst.d) : bruteforce_degseq(inst.d);
            } else if constexpr (std::is_same_v<T, ZeroWeightInstance>) {
                return bruteforce_zero(inst);
            } else {
                return bruteforce_partition(inst);
            }
        },
        file.instance);
}

InstanceFile with_k(InstanceFile file, int k) {
    if (k == 0) return file;
    if (auto* inst = std::get_if<DegSeqInstance>(&file.instance)) inst->k = k;
    return file;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hypergraph degree-sequence workbench", "hdsw"};
    app.require_subcommand(1);

    std::string input, input_dir, instance_path, certificate_path, from, to, problem;
    std::string output_path, certificate_out;
    std::uint64_t budget = kDefaultBudget;
    int k = 0;
    unsigned jobs = 1;
    Int n = 0, m = 0, max_value = 0;
    std::uint64_t seed = 0;
    bool planted = false, realize = false;

    auto add_k = [&](CLI::App* sub) {
        sub->add_option("--k", k, "Uniformity (2 or 3); overrides the instance's k")
            ->check(CLI::IsMember({2, 3}));
    };

    auto* decide_cmd = app.add_subcommand("decide", "Decide an instance exactly");
    auto* decide_input = decide_cmd->add_option("--input", input, "Instance JSON file");
    auto* decide_dir =
        decide_cmd->add_option("--input-dir", input_dir, "Decide every *.json file in a directory");
    decide_input->excludes(decide_dir);
    decide_cmd->add_option("--jobs", jobs, "Worker threads for --input-dir")->check(CLI::PositiveNumber);
    decide_cmd->add_option("--budget", budget, "Search node budget");
    add_k(decide_cmd);

    auto* reduce_cmd = app.add_subcommand("reduce", "Apply a forward reduction");
    reduce_cmd->add_option("--from", from)->required()->check(
        CLI::IsMember({"three_partition", "zero_weight", "degseq"}));
    reduce_cmd->add_option("--to", to)->required()->check(
        CLI::IsMember({"three_partition", "zero_weight", "degseq"}));
    reduce_cmd->add_option("--input", input)->required();

    auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against an instance");
    verify_cmd->add_option("--instance", instance_path)->required();
    verify_cmd->add_option("--certificate", certificate_path)->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force answer for small instances");
    oracle_cmd->add_option("--input", input)->required();
    add_k(oracle_cmd);

    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
    gen_cmd->add_option("--problem", problem)->required()->check(
        CLI::IsMember({"degseq", "three_partition"}));
    gen_cmd->add_option("--n", n)->required();
    gen_cmd->add_option("--m", m, "Edge count (degseq)");
    gen_cmd->add_option("--max-value", max_value, "Largest entry (three_partition)");
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_flag("--planted", planted, "Plant a solution (three_partition)");
    gen_cmd->add_option("--output", output_path, "Write the instance here instead of stdout");
    gen_cmd->add_option("--certificate-out", certificate_out, "Write the planted witness (degseq)");

    auto* graph_cmd = app.add_subcommand("graph-check", "Erdős–Gallai test for k = 2");
    graph_cmd->add_option("--input", input)->required();
    graph_cmd->add_flag("--realize", realize, "Include a Havel–Hakimi realization");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.push_back("hdsw");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (decide_cmd->parsed()) {
            if (!input_dir.empty()) return run_decide_batch(input_dir, jobs, budget, k, out, err);
            if (input.empty()) {
                err << "usage error: decide needs --input or --input-dir\n";
                return kExitUsage;
            }
            const Decision d = decide(parse_instance(read_file(input)), budget, k);
            if (!d.reason.empty()) err << "note: " << d.reason << '\n';
            out << d.document << '\n';
            return exit_code(d.answer);
        }

        if (reduce_cmd->parsed()) {
            const InstanceFile file = parse_instance(read_file(input));
            if (file.problem() != from) {
                err << "usage error: --from " << from << " but the input is a " << file.problem()
                    << " instance\n";
                return kExitUsage;
            }
            if (from == "three_partition" && to == "zero_weight") {
                const auto& inst = std::get<ThreePartitionInstance>(file.instance);
                out << serialize_reduction(inst, reduce_partition_to_zero(inst)) << '\n';
                return 0;
            }
            if (from == "three_partition" && to == "degseq") {
                const auto& inst = std::get<ThreePartitionInstance>(file.instance);
                out << serialize_reduction(reduce_partition_to_degseq(inst)) << '\n';
                return 0;
            }
            if (from == "zero_weight" && to == "degseq") {
                const auto& inst = std::get<ZeroWeightInstance>(file.instance);
                out << serialize_reduction(inst, reduce_zero_to_degseq(inst)) << '\n';
                return 0;
            }
            err << "usage error: no forward reduction from " << from << " to " << to << '\n';
            return kExitUsage;
        }

        if (verify_cmd->parsed()) {
            const InstanceFile file = parse_instance(read_file(instance_path));
            const auto doc = verify(file, read_file(certificate_path));
            out << doc.dump() << '\n';
            return doc["valid"].get<bool>() ? kExitYes : kExitNo;
        }

        if (oracle_cmd->parsed()) {
            const InstanceFile file = with_k(parse_instance(read_file(input)), k);
            const auto start = std::chrono::steady_clock::now();
            const bool yes = oracle(file);
            nlohmann::ordered_json doc;
            doc["answer"] = yes ? "YES" : "NO";
            doc["certificate"] = nullptr;
            doc["stats"] = {{"nodes", 0},
                            {"millis", static_cast<Int>(std::llround(millis_since(start)))}};
            out << doc.dump() << '\n';
            return yes ? kExitYes : kExitNo;
        }

        if (gen_cmd->parsed()) {
            std::string text;
            if (problem == "degseq") {
                const PlantedDegSeq g = gen_planted_degseq(n, m, seed);
                text = serialize_instance({g.instance});
                if (!certificate_out.empty()) {
                    write_file(certificate_out, serialize_certificate(g.witness));
                }
            } else {
                text = serialize_instance({gen_partition(n, max_value, seed, planted)});
            }
            if (output_path.empty()) {
                out << text << '\n';
            } else {
                write_file(output_path, text);
            }
            return 0;
        }

        if (graph_cmd->parsed()) {
            const InstanceFile file = parse_instance(read_file(input));
            const auto* inst = std::get_if<DegSeqInstance>(&file.instance);
            if (inst == nullptr) {
                err << "usage error: graph-check needs a degseq instance\n";
                return kExitUsage;
            }
            const bool graphical = eg_check(inst->d);
            nlohmann::ordered_json doc;
            doc["graphical"] = graphical;
            doc["realization"] = nullptr;
            if (graphical && realize) {
                if (auto g = hh_realize(inst->d)) {
                    doc["realization"] = nlohmann::ordered_json::parse(serialize_graph_certificate(*g));
                }
            }
            out << doc.dump() << '\n';
            return graphical ? kExitYes : kExitNo;
        }
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace hds
