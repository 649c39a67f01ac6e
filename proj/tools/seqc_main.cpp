// Copyright 2026 The SEQC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "seqc/backend.hpp"
#include "seqc/baseline.hpp"
#include "seqc/benchmarks.hpp"
#include "seqc/elaborate.hpp"
#include "seqc/metrics.hpp"
#include "seqc/parallel.hpp"
#include "seqc/stratify.hpp"
#include "seqc/verify.hpp"

namespace fs = std::filesystem;
using namespace seqc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 2;
constexpr int kExitInvalidInput = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct RunRecord {
    std::string family;
    int n = 0;
    int chiplets = 0;
    std::string pipeline;
    std::uint64_t seed = 0;
    MetricsReport metrics;
    std::string artifact;

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["family"] = family;
        j["n"] = n;
        j["chiplets"] = chiplets;
        j["pipeline"] = pipeline;
        j["seed"] = seed;
        j["metrics"] = nlohmann::json::parse(metrics.to_json_string());
        j["artifact"] = artifact;
        return j;
    }
};

std::string csv_header() {
    return "family,n,chiplets,pipeline,seed,esp,exec_ns,inter_gates,depth,gates,"
           "strat_s,elab_s,solve_s";
}

std::string csv_row(const RunRecord& r) {
    std::ostringstream row;
    auto opt = [](const std::optional<double>& v) {
        return v ? std::to_string(*v) : std::string();
    };
    row << r.family << ',' << r.n << ',' << r.chiplets << ',' << r.pipeline << ',' << r.seed
        << ',' << r.metrics.esp << ',' << r.metrics.exec_time_ns << ','
        << r.metrics.inter_chiplet_gates << ',' << r.metrics.depth << ','
        << r.metrics.gate_count << ',' << opt(r.metrics.stratify_time_s) << ','
        << opt(r.metrics.elaborate_time_s) << ',' << opt(r.metrics.solve_time_s);
    return row.str();
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

/// Compiles one (circuit, backend, pipeline) run, verifying before returning.
RunRecord run_one(const Circuit& c, const Backend& b, Pipeline pipeline, std::uint64_t seed,
                  unsigned workers, const std::string& family, int chiplets,
                  const std::string& artifact_path) {
    CompiledCircuit cc;
    MetricsReport metrics;
    if (pipeline == Pipeline::Baseline) {
        auto start = std::chrono::steady_clock::now();
        cc = baseline_compile(c, b, seed);
        metrics = compute_metrics(cc, b);
        metrics.solve_time_s = seconds_since(start);
    } else {
        SeqcResult result = seqc_compile(c, b, seed, workers);
        cc = std::move(result.compiled);
        metrics = compute_metrics(cc, b);
        metrics.stratify_time_s = result.stratify_seconds;
        metrics.elaborate_time_s = result.elaborate_seconds;
    }

    auto diagnostics = validate_compiled(cc, b);
    std::string why;
    if (!diagnostics.empty() || !permutation_equiv(c, cc, &why)) {
        std::string reason = diagnostics.empty() ? why : diagnostics.front();
        throw std::runtime_error("verification failed for " + artifact_path + ": " + reason);
    }
    write_file(artifact_path, cc.to_json_string(2));

    RunRecord record;
    record.family = family;
    record.n = static_cast<int>(c.num_qubits());
    record.chiplets = chiplets;
    record.pipeline = std::string(to_string(pipeline));
    record.seed = seed;
    record.metrics = metrics;
    record.artifact = artifact_path;
    return record;
}

void write_report(const std::vector<RunRecord>& records, const std::string& csv_path) {
    std::ostringstream csv;
    csv << csv_header() << '\n';
    for (const auto& r : records) csv << csv_row(r) << '\n';
    write_file(csv_path, csv.str());
}

/// Geometric-mean ratios of seqc against baseline for runs matching on
/// (family, n, chiplets, seed). Printed as the sweep summary.
void print_geomean_summary(const std::vector<RunRecord>& records) {
    auto key = [](const RunRecord& r) {
        return r.family + "/" + std::to_string(r.n) + "/" + std::to_string(r.chiplets) + "/" +
               std::to_string(r.seed);
    };
    std::map<std::string, const RunRecord*> baseline;
    for (const auto& r : records) {
        if (r.pipeline == "baseline") baseline[key(r)] = &r;
    }
    std::vector<std::pair<double, double>> esp_pairs, exec_pairs, inter_pairs, depth_pairs,
        gate_pairs;
    for (const auto& r : records) {
        if (r.pipeline != "seqc") continue;
        auto it = baseline.find(key(r));
        if (it == baseline.end()) continue;
        const RunRecord& base = *it->second;
        esp_pairs.push_back({r.metrics.esp, base.metrics.esp});
        if (base.metrics.exec_time_ns > 0) {
            exec_pairs.push_back({r.metrics.exec_time_ns, base.metrics.exec_time_ns});
        }
        if (base.metrics.inter_chiplet_gates > 0) {
            inter_pairs.push_back({static_cast<double>(r.metrics.inter_chiplet_gates),
                                   static_cast<double>(base.metrics.inter_chiplet_gates)});
        }
        depth_pairs.push_back({static_cast<double>(r.metrics.depth),
                               static_cast<double>(base.metrics.depth)});
        gate_pairs.push_back({static_cast<double>(r.metrics.gate_count),
                              static_cast<double>(base.metrics.gate_count)});
    }
    if (esp_pairs.empty()) return;
    std::cout << "geomean seqc/baseline:"
              << " esp=" << geomean_ratio(esp_pairs)
              << " exec=" << (exec_pairs.empty() ? 1.0 : geomean_ratio(exec_pairs))
              << " inter_gates=" << (inter_pairs.empty() ? 1.0 : geomean_ratio(inter_pairs))
              << " depth=" << geomean_ratio(depth_pairs)
              << " gates=" << geomean_ratio(gate_pairs) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chiplet-aware quantum circuit compiler"};
    app.require_subcommand(1);

    // --- gen-backend ---------------------------------------------------
    auto* gen = app.add_subcommand("gen-backend", "Generate a heavy-hex chiplet backend");
    int gen_chiplets = 2;
    int gen_qubits = 10;
    double gen_penalty = 4.0;
    std::string gen_out = "backend.json";
    gen->add_option("--chiplets", gen_chiplets, "Number of chiplets")->required();
    gen->add_option("--qubits-per-chiplet", gen_qubits, "Qubits per chiplet (multiple of 10)");
    gen->add_option("--inter-penalty", gen_penalty, "Inter/intra SWAP duration ratio");
    gen->add_option("--out", gen_out, "Output path")->required();

    // --- bench ----------------------------------------------------------
    auto* bench = app.add_subcommand("bench", "Generate a benchmark circuit");
    std::string bench_family = "ghz";
    int bench_n = 10;
    std::uint64_t bench_seed = 0;
    int bench_rounds = 2, bench_layers = 2, bench_steps = 1;
    std::string bench_out = "circuit.json";
    bench->add_option("--family", bench_family,
                      "ghz | bitcode | phasecode | vqe | tfim")->required();
    bench->add_option("--n", bench_n, "Qubit count")->required();
    bench->add_option("--seed", bench_seed, "Parameter seed (vqe)");
    bench->add_option("--rounds", bench_rounds, "Error correction rounds (codes)");
    bench->add_option("--layers", bench_layers, "Ansatz layers (vqe)");
    bench->add_option("--steps", bench_steps, "Trotter steps (tfim)");
    bench->add_option("--out", bench_out, "Output path")->required();

    // --- stratify ---------------------------------------------------------
    auto* strat_cmd = app.add_subcommand("stratify", "SEQC stage 1");
    std::string strat_circuit, strat_backend, strat_out = "strat.json";
    std::uint64_t strat_seed = 0;
    unsigned strat_workers = 0;
    int strat_anneal_trials = 0;
    int strat_alloc_trials = 4;
    strat_cmd->add_option("--circuit", strat_circuit)->required();
    strat_cmd->add_option("--backend", strat_backend)->required();
    strat_cmd->add_option("--seed", strat_seed);
    strat_cmd->add_option("--workers", strat_workers, "0 = hardware concurrency");
    strat_cmd->add_option("--anneal-trials", strat_anneal_trials,
                          "0 = 5 per resolved worker");
    strat_cmd->add_option("--alloc-trials", strat_alloc_trials);
    strat_cmd->add_option("--out", strat_out)->required();

    // --- elaborate ---------------------------------------------------------
    auto* elab_cmd = app.add_subcommand("elaborate", "SEQC stage 2");
    std::string elab_strat, elab_backend, elab_out = "cc.json";
    std::uint64_t elab_seed = 0;
    unsigned elab_workers = 0;
    int elab_layout_trials = 4;
    elab_cmd->add_option("--strat", elab_strat)->required();
    elab_cmd->add_option("--backend", elab_backend)->required();
    elab_cmd->add_option("--seed", elab_seed);
    elab_cmd->add_option("--workers", elab_workers, "0 = hardware concurrency");
    elab_cmd->add_option("--layout-trials", elab_layout_trials);
    elab_cmd->add_option("--out", elab_out)->required();

    // --- compile ---------------------------------------------------------
    auto* compile_cmd = app.add_subcommand("compile", "Full pipeline");
    std::string compile_pipeline = "seqc";
    std::string compile_circuit, compile_backend, compile_out = "cc.json";
    std::string compile_metrics_out;
    std::uint64_t compile_seed = 0;
    unsigned compile_workers = 0;
    compile_cmd->add_option("--pipeline", compile_pipeline, "seqc | baseline")->required();
    compile_cmd->add_option("--circuit", compile_circuit)->required();
    compile_cmd->add_option("--backend", compile_backend)->required();
    compile_cmd->add_option("--seed", compile_seed);
    compile_cmd->add_option("--workers", compile_workers);
    compile_cmd->add_option("--out", compile_out)->required();
    compile_cmd->add_option("--metrics-out", compile_metrics_out, "Optional metrics JSON");

    // --- verify ---------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "Check a compiled artifact");
    std::string verify_original, verify_compiled, verify_backend;
    bool verify_statevector = false;
    verify_cmd->add_option("--original", verify_original)->required();
    verify_cmd->add_option("--compiled", verify_compiled)->required();
    verify_cmd->add_option("--backend", verify_backend)->required();
    verify_cmd->add_flag("--statevector", verify_statevector,
                         "Also run the statevector oracle (desk scale)");

    // --- sweep ---------------------------------------------------------
    auto* sweep_cmd = app.add_subcommand("sweep", "Benchmark both pipelines");
    std::string sweep_families = "ghz,bitcode,phasecode,vqe,tfim";
    std::string sweep_chiplets = "2,4,6,9";
    std::string sweep_pipelines = "seqc,baseline";
    int sweep_seeds = 3;
    std::uint64_t sweep_master = 7;
    unsigned sweep_workers = 0;
    std::string sweep_out_dir = "runs";
    std::string sweep_config;
    sweep_cmd->add_option("--families", sweep_families);
    sweep_cmd->add_option("--chiplets", sweep_chiplets);
    sweep_cmd->add_option("--pipelines", sweep_pipelines);
    sweep_cmd->add_option("--seeds", sweep_seeds, "Seeds (replicates) per combination");
    sweep_cmd->add_option("--master-seed", sweep_master);
    sweep_cmd->add_option("--workers", sweep_workers);
    sweep_cmd->add_option("--out-dir", sweep_out_dir);
    sweep_cmd->add_option("--config", sweep_config, "JSON config file (flags override)");

    // --- report ---------------------------------------------------------
    auto* report_cmd = app.add_subcommand("report", "Aggregate run records into CSV");
    std::string report_in = "runs";
    std::string report_out = "report.csv";
    report_cmd->add_option("--in", report_in)->required();
    report_cmd->add_option("--out", report_out)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            Backend b = generate_backend(gen_chiplets, gen_qubits, gen_penalty);
            write_file(gen_out, b.to_json_string(2));
            std::cout << b.name << ": " << b.num_qubits() << " qubits, "
                      << b.links.size() << " links -> " << gen_out << "\n";
            return kExitOk;
        }
        if (*bench) {
            BenchSpec spec;
            spec.family = bench_family_from_string(bench_family);
            spec.n = bench_n;
            spec.seed = bench_seed;
            spec.rounds = bench_rounds;
            spec.layers = bench_layers;
            spec.steps = bench_steps;
            Circuit c = make_benchmark(spec);
            write_file(bench_out, c.to_json_string(2));
            std::cout << c.name() << "(" << c.num_qubits() << "): " << c.size()
                      << " gates -> " << bench_out << "\n";
            return kExitOk;
        }
        if (*strat_cmd) {
            Circuit c = Circuit::from_json_string(read_file(strat_circuit));
            Backend b = Backend::from_json_string(read_file(strat_backend));
            unsigned workers = resolve_workers(strat_workers);
            StratifyConfig cfg;
            cfg.annealing.trials =
                strat_anneal_trials > 0 ? strat_anneal_trials : 5 * static_cast<int>(workers);
            cfg.allocation_trials = strat_alloc_trials;
            auto start = std::chrono::steady_clock::now();
            StratifiedCircuit strat = stratify(c, b, cfg, strat_seed, workers);
            double elapsed = seconds_since(start);
            write_file(strat_out, strat.to_json_string(2));
            std::cout << "stratified " << c.name() << " into "
                      << strat.partition.num_subcircuits << " subcircuits with "
                      << strat.allocation.events.size() << " boundary events in " << elapsed
                      << " s -> " << strat_out << "\n";
            return kExitOk;
        }
        if (*elab_cmd) {
            StratifiedCircuit strat = StratifiedCircuit::from_json_string(read_file(elab_strat));
            Backend b = Backend::from_json_string(read_file(elab_backend));
            ElaborateConfig cfg;
            cfg.layout_trials = elab_layout_trials;
            auto start = std::chrono::steady_clock::now();
            CompiledCircuit cc = elaborate(strat, b, resolve_workers(elab_workers), elab_seed, cfg);
            double elapsed = seconds_since(start);
            write_file(elab_out, cc.to_json_string(2));
            std::cout << "elaborated " << strat.circuit_name << " in " << elapsed << " s -> "
                      << elab_out << "\n";
            return kExitOk;
        }
        if (*compile_cmd) {
            Circuit c = Circuit::from_json_string(read_file(compile_circuit));
            Backend b = Backend::from_json_string(read_file(compile_backend));
            Pipeline pipeline = pipeline_from_string(compile_pipeline);
            RunRecord record =
                run_one(c, b, pipeline, compile_seed, resolve_workers(compile_workers),
                        c.name(), static_cast<int>(b.chiplets.size()), compile_out);
            if (!compile_metrics_out.empty()) {
                write_file(compile_metrics_out, record.metrics.to_json_string(2));
            }
            std::cout << record.pipeline << " compile of " << c.name() << ": esp "
                      << record.metrics.esp << ", exec " << record.metrics.exec_time_ns
                      << " ns, inter gates " << record.metrics.inter_chiplet_gates << " -> "
                      << compile_out << "\n";
            return kExitOk;
        }
        if (*verify_cmd) {
            Circuit c = Circuit::from_json_string(read_file(verify_original));
            CompiledCircuit cc = CompiledCircuit::from_json_string(read_file(verify_compiled));
            Backend b = Backend::from_json_string(read_file(verify_backend));
            auto diagnostics = validate_compiled(cc, b);
            for (const auto& d : diagnostics) std::cerr << "invalid: " << d << "\n";
            std::string why;
            bool perm = permutation_equiv(c, cc, &why);
            if (!perm) std::cerr << "not equivalent: " << why << "\n";
            bool ok = diagnostics.empty() && perm;
            if (verify_statevector) {
                double fidelity = statevector_equiv(c, cc);
                std::cout << "statevector fidelity " << fidelity << "\n";
                ok = ok && fidelity >= 1.0 - 1e-9;
            }
            std::cout << (ok ? "ok" : "FAILED") << "\n";
            return ok ? kExitOk : kExitVerification;
        }
        if (*sweep_cmd) {
            if (!sweep_config.empty()) {
                nlohmann::json j = nlohmann::json::parse(read_file(sweep_config));
                if (sweep_cmd->count("--families") == 0 && j.contains("families"))
                    sweep_families = j["families"].get<std::string>();
                if (sweep_cmd->count("--chiplets") == 0 && j.contains("chiplets"))
                    sweep_chiplets = j["chiplets"].get<std::string>();
                if (sweep_cmd->count("--pipelines") == 0 && j.contains("pipelines"))
                    sweep_pipelines = j["pipelines"].get<std::string>();
                if (sweep_cmd->count("--seeds") == 0 && j.contains("seeds"))
                    sweep_seeds = j["seeds"].get<int>();
                if (sweep_cmd->count("--master-seed") == 0 && j.contains("master_seed"))
                    sweep_master = j["master_seed"].get<std::uint64_t>();
                if (sweep_cmd->count("--workers") == 0 && j.contains("workers"))
                    sweep_workers = j["workers"].get<unsigned>();
            }
            unsigned workers = resolve_workers(sweep_workers);

            // Record the resolved configuration next to the runs.
            nlohmann::json resolved;
            resolved["families"] = sweep_families;
            resolved["chiplets"] = sweep_chiplets;
            resolved["pipelines"] = sweep_pipelines;
            resolved["seeds"] = sweep_seeds;
            resolved["master_seed"] = sweep_master;
            resolved["workers"] = workers;
            write_file((fs::path(sweep_out_dir) / "sweep_config.json").string(),
                       resolved.dump(2));

            std::vector<RunRecord> records;
            std::uint64_t run_index = 0;
            for (const std::string& chip_text : split_csv(sweep_chiplets)) {
                int chiplets = std::stoi(chip_text);
                Backend b = generate_backend(chiplets);
                int n = 10 * chiplets;
                for (const std::string& family_text : split_csv(sweep_families)) {
                    BenchFamily family = bench_family_from_string(family_text);
                    for (int rep = 0; rep < sweep_seeds; ++rep) {
                        // All randomness flows from the master seed through
                        // the run index.
                        std::uint64_t seed = sweep_master ^ run_index;
                        ++run_index;
                        BenchSpec spec;
                        spec.family = family;
                        spec.n = n;
                        spec.seed = seed;
                        Circuit c = make_benchmark(spec);
                        for (const std::string& pipe_text : split_csv(sweep_pipelines)) {
                            std::ostringstream stem;
                            stem << family_text << "_" << n << "q_" << chiplets << "c_"
                                 << pipe_text << "_s" << rep;
                            fs::path artifact = fs::path(sweep_out_dir) / (stem.str() + ".cc.json");
                            RunRecord record =
                                run_one(c, b, pipeline_from_string(pipe_text), seed, workers,
                                        family_text, chiplets, artifact.string());
                            write_file((fs::path(sweep_out_dir) / (stem.str() + ".run.json"))
                                           .string(),
                                       record.to_json().dump(2));
                            records.push_back(std::move(record));
                            std::cout << csv_row(records.back()) << "\n";
                        }
                    }
                }
            }
            write_report(records, (fs::path(sweep_out_dir) / "report.csv").string());
            print_geomean_summary(records);
            std::cout << records.size() << " runs -> " << sweep_out_dir << "\n";
            return kExitOk;
        }
        if (*report_cmd) {
            std::vector<RunRecord> records;
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(report_in)) {
                if (entry.path().string().ends_with(".run.json")) files.push_back(entry.path());
            }
            std::sort(files.begin(), files.end());
            for (const auto& file : files) {
                nlohmann::json j = nlohmann::json::parse(read_file(file.string()));
                RunRecord r;
                r.family = j.at("family").get<std::string>();
                r.n = j.at("n").get<int>();
                r.chiplets = j.at("chiplets").get<int>();
                r.pipeline = j.at("pipeline").get<std::string>();
                r.seed = j.at("seed").get<std::uint64_t>();
                const auto& m = j.at("metrics");
                r.metrics.esp = m.at("esp").get<double>();
                r.metrics.exec_time_ns = m.at("exec_time_ns").get<double>();
                r.metrics.inter_chiplet_gates = m.at("inter_chiplet_gates").get<int>();
                r.metrics.depth = m.at("depth").get<int>();
                r.metrics.gate_count = m.at("gate_count").get<int>();
                if (m.contains("stratify_time_s"))
                    r.metrics.stratify_time_s = m["stratify_time_s"].get<double>();
                if (m.contains("elaborate_time_s"))
                    r.metrics.elaborate_time_s = m["elaborate_time_s"].get<double>();
                if (m.contains("solve_time_s"))
                    r.metrics.solve_time_s = m["solve_time_s"].get<double>();
                r.artifact = j.at("artifact").get<std::string>();
                records.push_back(std::move(r));
            }
            write_report(records, report_out);
            print_geomean_summary(records);
            std::cout << records.size() << " records -> " << report_out << "\n";
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::string what = e.what();
        std::cerr << "error: " << what << "\n";
        return what.find("verification failed") != std::string::npos ? kExitVerification
                                                                     : kExitInvalidInput;
    }
    return kExitOk;
}
