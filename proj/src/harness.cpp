#include "swarmsim/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "swarmsim/error.hpp"
#include "swarmsim/format.hpp"

namespace swarmsim {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& what) {
    throw SimError(ErrorKind::Validation, key + ": " + what);
}

/// Reads typed members out of one JSON object and rejects leftovers.
class Section {
public:
    Section(const json& doc, std::string name) : name_(std::move(name)) {
        if (doc.is_null()) return;
        if (!doc.is_object()) fail(name_, "expected an object");
        obj_ = &doc;
    }

    template <typename T>
    void read(const char* key, T& out) {
        seen_.insert(key);
        if (obj_ == nullptr || !obj_->contains(key)) return;
        const json& v = obj_->at(key);
        try {
            if constexpr (std::is_same_v<T, bool>) {
                if (!v.is_boolean()) fail(path(key), "expected a boolean");
            } else if constexpr (std::is_integral_v<T>) {
                if (!v.is_number_integer()) fail(path(key), "expected an integer");
            } else if constexpr (std::is_floating_point_v<T>) {
                if (!v.is_number()) fail(path(key), "expected a number");
            } else if constexpr (std::is_same_v<T, std::string>) {
                if (!v.is_string()) fail(path(key), "expected a string");
            }
            out = v.get<T>();
        } catch (const json::exception& e) {
            fail(path(key), e.what());
        }
    }

    const json& child(const char* key) {
        seen_.insert(key);
        static const json null_value;
        if (obj_ == nullptr || !obj_->contains(key)) return null_value;
        return obj_->at(key);
    }

    bool has(const char* key) const { return obj_ != nullptr && obj_->contains(key); }

    void finish() const {
        if (obj_ == nullptr) return;
        for (const auto& [k, v] : obj_->items()) {
            if (!seen_.count(k)) fail(path(k.c_str()), "unknown key");
        }
    }

    std::string path(const char* key) const { return name_.empty() ? key : name_ + "." + key; }

private:
    std::string name_;
    const json* obj_ = nullptr;
    std::set<std::string, std::less<>> seen_;
};

template <typename E>
struct EnumName {
    E value;
    const char* name;
};

constexpr EnumName<HeuristicMode> kHeuristics[] = {
    {HeuristicMode::Jitter, "jitter"}, {HeuristicMode::Uniform, "uniform"}, {HeuristicMode::Constant, "constant"}};
constexpr EnumName<SelectionRule> kSelections[] = {{SelectionRule::ArgMin, "argmin"}, {SelectionRule::Sample, "sample"}};
constexpr EnumName<UrgeMode> kUrges[] = {{UrgeMode::UnexploredFraction, "unexplored_fraction"},
                                         {UrgeMode::PheromoneContrast, "pheromone_contrast"}};
constexpr EnumName<ScenarioMode> kModes[] = {{ScenarioMode::Static, "static"}, {ScenarioMode::Dynamic, "dynamic"}};

template <typename E, std::size_t N>
void read_enum(Section& s, const char* key, const EnumName<E> (&table)[N], E& out) {
    if (!s.has(key)) {
        s.child(key);
        return;
    }
    std::string name;
    s.read(key, name);
    for (const auto& e : table) {
        if (name == e.name) {
            out = e.value;
            return;
        }
    }
    fail(s.path(key), "unknown value '" + name + "'");
}

template <typename E, std::size_t N>
const char* enum_name(const EnumName<E> (&table)[N], E v) {
    for (const auto& e : table) {
        if (e.value == v) return e.name;
    }
    return "?";
}

void read_obstacles(const json& doc, ObstacleSpec& out) {
    Section s(doc, "world.obstacles");
    if (doc.is_null()) return;
    std::string kind = "none";
    s.read("kind", kind);
    if (kind == "none") {
        out = ObstacleSpec::none();
    } else if (kind == "density") {
        double p = 0.0;
        s.read("density", p);
        out = ObstacleSpec::uniform(p);
    } else if (kind == "list") {
        const json& cells = s.child("cells");
        std::vector<Coord> coords;
        if (!cells.is_array()) fail("world.obstacles.cells", "expected an array of [x, y] pairs");
        for (const json& c : cells) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer()) {
                fail("world.obstacles.cells", "expected [x, y] integer pairs");
            }
            coords.push_back({c[0].get<int>(), c[1].get<int>()});
        }
        out = ObstacleSpec::list(std::move(coords));
    } else {
        fail("world.obstacles.kind", "unknown value '" + kind + "'");
    }
    s.child("density");
    s.child("cells");
    s.finish();
}

}  // namespace

Config parse_config(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document.begin(), document.end(), nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw SimError(ErrorKind::Parse, std::string("config parse error: ") + e.what());
    }
    if (!doc.is_object()) throw SimError(ErrorKind::Parse, "config document must be a JSON object");

    Config c;
    Section root(doc, "");

    Section world(root.child("world"), "world");
    world.read("m", c.m);
    world.read("n", c.n);
    world.read("targets", c.targets);
    read_obstacles(world.child("obstacles"), c.obstacles);
    world.finish();

    Section swarm(root.child("swarm"), "swarm");
    swarm.read("robots", c.swarm.robots);
    swarm.read("r_min", c.swarm.r_min);
    swarm.read("r_t", c.swarm.transmission_range);
    swarm.read("coordinator_counts", c.swarm.coordinator_counts);
    swarm.read("disarm_steps", c.swarm.disarm_steps);
    swarm.finish();

    Section ph(root.child("pheromone"), "pheromone");
    ph.read("delta_tau0", c.pheromone.delta_tau0);
    ph.read("a1", c.pheromone.a1);
    ph.read("a2", c.pheromone.a2);
    ph.read("rho", c.pheromone.rho);
    ph.read("sensing_range", c.pheromone.sensing_range);
    ph.finish();

    Section ex(root.child("explore"), "explore");
    ex.read("phi", c.explore.phi);
    ex.read("lambda", c.explore.lambda);
    ex.read("eta", c.explore.eta_base);
    read_enum(ex, "heuristic", kHeuristics, c.explore.heuristic);
    read_enum(ex, "selection", kSelections, c.explore.selection);
    ex.finish();

    Section ff(root.child("firefly"), "firefly");
    ff.read("alpha", c.firefly.alpha);
    ff.read("beta0", c.firefly.beta0);
    ff.read("delta", c.firefly.delta_margin);
    if (ff.has("gamma") && !ff.child("gamma").is_null()) {
        ff.read("gamma", c.firefly.gamma);
        c.gamma_from_grid = false;
    } else {
        ff.child("gamma");
        c.gamma_from_grid = true;
    }
    ff.finish();
    if (c.gamma_from_grid) c.firefly.gamma = 1.0 / std::max(c.m, c.n);

    Section en(root.child("energy"), "energy");
    en.read("move_cost", c.energy.move_cost);
    en.read("stop_cost", c.energy.stop_cost);
    {
        const json& turns = en.child("turn_costs");
        if (!turns.is_null()) {
            if (!turns.is_array() || turns.size() != 4) {
                fail("energy.turn_costs", "expected 4 numbers for 45, 90, 135 and 180 degrees");
            }
            for (std::size_t i = 0; i < 4; ++i) {
                if (!turns[i].is_number()) fail("energy.turn_costs", "expected numbers");
                c.energy.turn_costs[i + 1] = turns[i].get<double>();
            }
        }
    }
    en.read("disarm_cost", c.energy.disarm_cost);
    en.read("packet_bits", c.energy.packet_bits);
    en.read("e_tx", c.energy.e_tx);
    en.read("e_cct", c.energy.e_cct);
    en.read("e_rc", c.energy.e_rc);
    en.read("psi", c.energy.psi);
    en.read("joule_to_unit", c.energy.joule_to_unit);
    en.read("bit_rate", c.energy.bit_rate);
    en.read("budget", c.energy.budget);
    en.finish();

    Section sc(root.child("scenario"), "scenario");
    read_enum(sc, "mode", kModes, c.scenario.mode);
    sc.read("p_explode", c.scenario.p_explode);
    sc.read("blast_radius", c.scenario.blast_radius);
    sc.finish();

    Section w(root.child("weights"), "weights");
    const bool has_w1 = w.has("w1");
    const bool has_w2 = w.has("w2");
    w.read("w1", c.weights.w1);
    w.read("w2", c.weights.w2);
    if (has_w1 && !has_w2) c.weights.w2 = 1.0 - c.weights.w1;
    if (has_w2 && !has_w1) c.weights.w1 = 1.0 - c.weights.w2;
    w.read("visit_time", c.visit_time);
    read_enum(w, "urge", kUrges, c.urge);
    w.finish();

    Section run(root.child("run"), "run");
    long long seed = static_cast<long long>(c.seed);
    run.read("seed", seed);
    if (seed < 0) fail("run.seed", "must be >= 0");
    c.seed = static_cast<std::uint64_t>(seed);
    run.read("replications", c.replications);
    run.read("max_steps", c.scenario.max_steps);
    run.finish();

    if (root.has("sweep")) {
        Section sw(root.child("sweep"), "sweep");
        SweepSpec spec;
        sw.read("axis", spec.axis);
        spec.replications = c.replications;
        sw.read("replications", spec.replications);
        const json& values = sw.child("values");
        if (!values.is_array() || values.empty()) fail("sweep.values", "expected a non-empty array of numbers");
        for (const json& v : values) {
            if (!v.is_number()) fail("sweep.values", "expected numbers");
            spec.values.push_back(v.get<double>());
        }
        if (spec.axis.empty()) fail("sweep.axis", "required");
        if (spec.replications < 1) fail("sweep.replications", "must be >= 1");
        sw.finish();
        c.sweep = std::move(spec);
    }
    root.finish();

    c.validate();
    return c;
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw SimError(ErrorKind::Io, "cannot read config " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

namespace {

json to_json(const Config& c) {
    json doc;
    json obstacles;
    switch (c.obstacles.kind) {
        case ObstacleSpec::Kind::None: obstacles = {{"kind", "none"}}; break;
        case ObstacleSpec::Kind::Density: obstacles = {{"kind", "density"}, {"density", c.obstacles.density}}; break;
        case ObstacleSpec::Kind::List: {
            json cells = json::array();
            for (Coord p : c.obstacles.cells) cells.push_back({p.x, p.y});
            obstacles = {{"kind", "list"}, {"cells", cells}};
            break;
        }
    }
    doc["world"] = {{"m", c.m}, {"n", c.n}, {"targets", c.targets}, {"obstacles", obstacles}};
    doc["swarm"] = {{"robots", c.swarm.robots},
                    {"r_min", c.swarm.r_min},
                    {"r_t", c.swarm.transmission_range},
                    {"coordinator_counts", c.swarm.coordinator_counts},
                    {"disarm_steps", c.swarm.disarm_steps}};
    doc["pheromone"] = {{"delta_tau0", c.pheromone.delta_tau0},
                        {"a1", c.pheromone.a1},
                        {"a2", c.pheromone.a2},
                        {"rho", c.pheromone.rho},
                        {"sensing_range", c.pheromone.sensing_range}};
    doc["explore"] = {{"phi", c.explore.phi},
                      {"lambda", c.explore.lambda},
                      {"eta", c.explore.eta_base},
                      {"heuristic", enum_name(kHeuristics, c.explore.heuristic)},
                      {"selection", enum_name(kSelections, c.explore.selection)}};
    doc["firefly"] = {{"alpha", c.firefly.alpha},
                      {"beta0", c.firefly.beta0},
                      {"gamma", c.gamma_from_grid ? json(nullptr) : json(c.firefly.gamma)},
                      {"delta", c.firefly.delta_margin}};
    doc["energy"] = {{"move_cost", c.energy.move_cost},
                     {"stop_cost", c.energy.stop_cost},
                     {"turn_costs", {c.energy.turn_costs[1], c.energy.turn_costs[2], c.energy.turn_costs[3],
                                     c.energy.turn_costs[4]}},
                     {"disarm_cost", c.energy.disarm_cost},
                     {"packet_bits", c.energy.packet_bits},
                     {"e_tx", c.energy.e_tx},
                     {"e_cct", c.energy.e_cct},
                     {"e_rc", c.energy.e_rc},
                     {"psi", c.energy.psi},
                     {"joule_to_unit", c.energy.joule_to_unit},
                     {"bit_rate", c.energy.bit_rate},
                     {"budget", c.energy.budget}};
    doc["scenario"] = {{"mode", enum_name(kModes, c.scenario.mode)},
                       {"p_explode", c.scenario.p_explode},
                       {"blast_radius", c.scenario.blast_radius}};
    doc["weights"] = {{"w1", c.weights.w1},
                      {"w2", c.weights.w2},
                      {"visit_time", c.visit_time},
                      {"urge", enum_name(kUrges, c.urge)}};
    doc["run"] = {{"seed", c.seed}, {"replications", c.replications}, {"max_steps", c.scenario.max_steps}};
    if (c.sweep) {
        doc["sweep"] = {{"axis", c.sweep->axis}, {"values", c.sweep->values}, {"replications", c.sweep->replications}};
    }
    return doc;
}

}  // namespace

std::string render_config(const Config& config) { return to_json(config).dump(2) + "\n"; }

Config with_axis_value(const Config& config, const std::string& path, double value) {
    json doc = to_json(config);
    doc.erase("sweep");
    const auto dot = path.find('.');
    if (dot == std::string::npos) fail(path, "sweep axis must look like section.key");
    const std::string section = path.substr(0, dot);
    const std::string key = path.substr(dot + 1);
    if (!doc.contains(section) || !doc[section].is_object() || !doc[section].contains(key)) {
        fail(path, "unknown sweep axis");
    }
    json& slot = doc[section][key];
    if (slot.is_number_integer() || (slot.is_number() && !slot.is_number_float())) {
        if (value != std::floor(value)) fail(path, "integer axis given a fractional value");
        slot = static_cast<long long>(value);
    } else {
        slot = value;
    }
    if (path == "weights.w1") doc["weights"]["w2"] = 1.0 - value;
    if (path == "weights.w2") doc["weights"]["w1"] = 1.0 - value;
    Config out = parse_config(doc.dump());
    out.sweep = config.sweep;
    return out;
}

MetricSummary summarize(const std::vector<double>& xs) {
    MetricSummary s;
    if (xs.empty()) return s;
    double sum = 0.0;
    for (double x : xs) sum += x;
    s.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - s.mean) * (x - s.mean);
        s.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return s;
}

std::vector<SummaryRow> ResultTable::summarize() const {
    std::vector<SummaryRow> out;
    std::size_t i = 0;
    while (i < rows.size()) {
        std::size_t j = i;
        std::vector<double> steps, tesc, f1, f2, found, alive, done, obj;
        while (j < rows.size() && rows[j].axis_value == rows[i].axis_value) {
            const RunResult& r = rows[j].result;
            steps.push_back(r.steps);
            tesc.push_back(r.tesc);
            f1.push_back(r.f1);
            f2.push_back(r.f2);
            found.push_back(r.targets_found);
            alive.push_back(r.alive_fraction);
            done.push_back(r.completed ? 1.0 : 0.0);
            obj.push_back(r.objective);
            ++j;
        }
        SummaryRow row;
        row.axis_value = rows[i].axis_value;
        row.runs = static_cast<int>(j - i);
        row.steps = swarmsim::summarize(steps);
        row.tesc = swarmsim::summarize(tesc);
        row.f1 = swarmsim::summarize(f1);
        row.f2 = swarmsim::summarize(f2);
        row.targets_found = swarmsim::summarize(found);
        row.alive_fraction = swarmsim::summarize(alive);
        row.completed = swarmsim::summarize(done);
        row.objective = swarmsim::summarize(obj);
        out.push_back(row);
        i = j;
    }
    return out;
}

ResultTable sweep(const Config& config, const SweepSpec& spec, unsigned jobs) {
    if (spec.values.empty()) throw SimError(ErrorKind::Validation, "sweep.values must not be empty");
    if (spec.replications < 1) throw SimError(ErrorKind::Validation, "sweep.replications must be >= 1");

    ResultTable table;
    table.axis = spec.axis;
    for (double v : spec.values) {
        const Config point = with_axis_value(config, spec.axis, v);
        for (int rep = 0; rep < spec.replications; ++rep) table.rows.push_back({v, rep, point, {}});
    }

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    std::string error_context;
    auto worker = [&] {
        for (std::size_t i = next++; i < table.rows.size(); i = next++) {
            RunRow& row = table.rows[i];
            const std::uint64_t seed = replicate_seed(config.seed, row.replicate);
            try {
                row.result = run(row.config, seed);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                    error_context = spec.axis + "=" + format_double(row.axis_value) + " seed=" + std::to_string(seed);
                }
                next = table.rows.size();
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(table.rows.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) {
        try {
            std::rethrow_exception(error);
        } catch (const SimError& e) {
            throw SimError(e.kind(), "run failed at " + error_context + ": " + e.what());
        } catch (const std::exception& e) {
            throw std::runtime_error("run failed at " + error_context + ": " + e.what());
        }
    }
    return table;
}

void write_raw_csv(const ResultTable& table, std::ostream& os) {
    os << kRawCsvHeader << '\n';
    for (const RunRow& row : table.rows) {
        const Config& c = row.config;
        const RunResult& r = row.result;
        os << r.seed << ',' << format_double(c.weights.w1) << ',' << format_double(c.weights.w2) << ',' << c.m << ','
           << c.n << ',' << c.swarm.robots << ',' << c.targets << ',' << c.swarm.r_min << ','
           << format_double(c.swarm.transmission_range) << ',' << to_string(c.scenario.mode) << ',' << r.steps << ','
           << format_double(r.tesc) << ',' << format_double(r.f1) << ',' << r.f2 << ',' << r.targets_found << ','
           << format_double(r.alive_fraction) << ',' << (r.completed ? 1 : 0) << '\n';
    }
}

void write_summary_csv(const ResultTable& table, std::ostream& os) {
    static constexpr const char* metrics[] = {"steps", "tesc", "f1", "f2", "targets_found",
                                              "alive_fraction", "completed", "objective"};
    os << "axis,value,runs";
    for (const char* m : metrics) os << ',' << m << "_mean," << m << "_std";
    os << '\n';
    for (const SummaryRow& s : table.summarize()) {
        os << table.axis << ',' << format_double(s.axis_value) << ',' << s.runs;
        for (const MetricSummary* m : {&s.steps, &s.tesc, &s.f1, &s.f2, &s.targets_found, &s.alive_fraction,
                                       &s.completed, &s.objective}) {
            os << ',' << format_double(m->mean) << ',' << format_double(m->stddev);
        }
        os << '\n';
    }
}

void write_results(const ResultTable& table, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw SimError(ErrorKind::Io, "cannot create " + dir.string() + ": " + ec.message());
    std::ofstream raw(dir / "raw.csv", std::ios::binary);
    std::ofstream summary(dir / "summary.csv", std::ios::binary);
    if (!raw || !summary) throw SimError(ErrorKind::Io, "cannot write results under " + dir.string());
    write_raw_csv(table, raw);
    write_summary_csv(table, summary);
    if (!raw || !summary) throw SimError(ErrorKind::Io, "write failed under " + dir.string());
}

}  // namespace swarmsim
