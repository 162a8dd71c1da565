#include "holistic/sim.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "holistic/grid_ops.hpp"
#include "holistic/rk45.hpp"

namespace holistic {

std::string to_string(EventKind k) {
    switch (k) {
        case EventKind::None:         return "none";
        case EventKind::Instability:  return "instability";
        case EventKind::Irregularity: return "irregularity";
    }
    return "none";
}

void SimConfig::validate() const {
    model.validate();
    if (N < 3) throw std::invalid_argument("SimConfig: N must be >= 3");
    if (!(T > 0.0)) throw std::invalid_argument("SimConfig: T must be positive");
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw std::invalid_argument("SimConfig: tolerances must be positive");
    if (output_stride < 1) throw std::invalid_argument("SimConfig: output_stride must be >= 1");
}

int count_extrema(const Eigen::VectorXd& u) {
    const Eigen::Index n = u.size();
    int count = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        const double prev = u[(j + n - 1) % n];
        const double next = u[(j + 1) % n];
        if ((u[j] > prev && u[j] > next) || (u[j] < prev && u[j] < next)) ++count;
    }
    return count;
}

bool detect_irregularity(const GridField& U, int baseline_extrema) {
    return count_extrema(U.values) > baseline_extrema;
}

IntegrationResult integrate(const SimConfig& cfg) {
    cfg.validate();
    const double H = 2.0 * M_PI / cfg.N;
    ModelSpec spec = cfg.model;
    spec.H = H;

    GridField U0 = sine_field(cfg.N, cfg.A);
    const int baseline = count_extrema(U0.values);

    IntegrationResult res;
    res.times.reserve(64);
    long step_counter = 0;

    auto rhs = [&spec, H](double, const Eigen::VectorXd& u) {
        return model_rhs(GridField(u, H), spec).values;
    };

    Rk45Options opt;
    opt.rel_tol = cfg.rel_tol;
    opt.abs_tol = cfg.abs_tol;

    if (cfg.store_trajectory) {
        res.times.push_back(0.0);
        res.states.push_back(U0.values);
    }
    res.final_state = U0.values;
    res.final_time = 0.0;

    auto on_accept = [&](double t, const Eigen::VectorXd& y) {
        ++step_counter;
        res.final_state = y;
        res.final_time = t;
        if (cfg.store_trajectory && step_counter % cfg.output_stride == 0) {
            res.times.push_back(t);
            res.states.push_back(y);
        }
        if (cfg.check_instability &&
            y.lpNorm<Eigen::Infinity>() > cfg.blowup_threshold) {
            res.event = {EventKind::Instability, t};
            return StepOutcome::Stop;
        }
        if (cfg.check_irregularity && count_extrema(y) > baseline) {
            res.event = {EventKind::Irregularity, t};
            return StepOutcome::Stop;
        }
        return StepOutcome::Continue;
    };

    const Rk45Status status = integrate_rk45(rhs, 0.0, cfg.T, U0.values, opt, on_accept);
    res.accepted_steps = step_counter;
    switch (status) {
        case Rk45Status::ReachedEnd:
            res.status = IntegrationStatus::Completed;
            if (cfg.store_trajectory &&
                (res.times.empty() || res.times.back() != res.final_time)) {
                res.times.push_back(res.final_time);
                res.states.push_back(res.final_state);
            }
            break;
        case Rk45Status::StoppedByCallback:
            res.status = IntegrationStatus::Event;
            break;
        case Rk45Status::StepSizeUnderflow:
            res.status = IntegrationStatus::IntegratorFailure;
            break;
    }
    return res;
}

namespace {

// Single probe used by the amplitude search: did the filtered event occur?
struct ProbeResult {
    bool hit = false;
    EventKind kind = EventKind::None;
    double time = 0.0;
};

ProbeResult probe(const ModelSpec& model, int N, double A, EventKind kind_filter,
                  double rel_tol) {
    SimConfig cfg;
    cfg.model = model;
    cfg.N = N;
    cfg.A = A;
    cfg.rel_tol = rel_tol;
    cfg.store_trajectory = false;
    // When hunting instability, irregular profiles must not stop the run;
    // blow-up always terminates regardless of the filter.
    cfg.check_irregularity = (kind_filter != EventKind::Instability);
    const IntegrationResult r = integrate(cfg);
    ProbeResult p;
    if (r.status == IntegrationStatus::Event) {
        p.kind = r.event.kind;
        p.time = r.event.time;
        p.hit = (kind_filter == EventKind::None) || (r.event.kind == kind_filter);
    }
    return p;
}

}  // namespace

SweepRecord critical_amplitude(const ModelSpec& model, const std::string& model_id, int N,
                               int sign, EventKind kind_filter,
                               const AmplitudeSearchOptions& opt) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("critical_amplitude: sign must be +1 or -1");

    SweepRecord rec;
    rec.model_id = model_id;
    rec.N = N;
    rec.sign = sign;
    rec.search_kind = kind_filter;

    // Exponential bracketing from |A| = A_start.
    double lo = 0.0;
    double hi = 0.0;
    ProbeResult hit_probe;
    for (double a = opt.A_start;; a *= 2.0) {
        const ProbeResult p = probe(model, N, sign * a, kind_filter, opt.rel_tol);
        if (p.hit) {
            hi = a;
            hit_probe = p;
            break;
        }
        lo = a;
        if (a >= opt.A_cap) return rec;  // no event up to the cap
    }

    // Bisection on |A| to the requested relative width.
    while (hi - lo > opt.bisection_rel_width * hi) {
        const double mid = 0.5 * (lo + hi);
        const ProbeResult p = probe(model, N, sign * mid, kind_filter, opt.rel_tol);
        if (p.hit) {
            hi = mid;
            hit_probe = p;
        } else {
            lo = mid;
        }
    }
    rec.A_star = hi;
    rec.event = hit_probe.kind;
    rec.t_event = hit_probe.time;
    return rec;
}

std::vector<SweepRecord> sweep(const std::vector<SweepModel>& models,
                               const std::vector<int>& n_values,
                               const AmplitudeSearchOptions& opt) {
    if (models.empty() || n_values.empty())
        throw std::invalid_argument("sweep: model and N lists must be nonempty");

    struct Cell {
        const SweepModel* model;
        int N;
        int sign;
        EventKind kind;
    };
    std::vector<Cell> cells;
    for (const auto& m : models)
        for (const int n : n_values)
            for (const int sign : {+1, -1})
                for (const EventKind kind : {EventKind::Instability, EventKind::Irregularity})
                    cells.push_back({&m, n, sign, kind});

    std::vector<SweepRecord> records(cells.size());

    unsigned threads = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("HOLISTIC_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) threads = static_cast<unsigned>(v);
    }
    threads = std::max(1u, std::min<unsigned>(threads, cells.size()));

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            const Cell& c = cells[i];
            records[i] = critical_amplitude(c.model->spec, c.model->id, c.N, c.sign,
                                            c.kind, opt);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return records;
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
    std::string out = "model,N,sign,A_star,event,t_event\n";
    char buf[64];
    for (const auto& r : records) {
        out += r.model_id;
        out += ',';
        out += std::to_string(r.N);
        out += ',';
        out += (r.sign > 0 ? '+' : '-');
        out += ',';
        if (r.A_star) {
            std::snprintf(buf, sizeof buf, "%.17g", *r.A_star);
            out += buf;
        }
        out += ',';
        out += to_string(r.event);
        out += ',';
        if (r.t_event) {
            std::snprintf(buf, sizeof buf, "%.17g", *r.t_event);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

}  // namespace holistic
