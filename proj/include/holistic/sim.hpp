#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holistic/model.hpp"

namespace holistic {

enum class EventKind { None, Instability, Irregularity };

std::string to_string(EventKind k);

/// Configuration of one initial-value experiment: U_j(0) = A sin(X_j) on an
/// N-point periodic grid with H = 2 pi / N, integrated up to T or the first
/// detected event.
struct SimConfig {
    ModelSpec model;
    int N = 8;
    double A = 1.0;                  // initial amplitude
    double T = 10.0;                 // maximum duration
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    double blowup_threshold = 1000.0;
    int output_stride = 1;           // store every k-th accepted step
    bool store_trajectory = true;
    bool check_instability = true;
    bool check_irregularity = true;

    void validate() const;
};

struct EventRecord {
    EventKind kind = EventKind::None;
    double time = 0.0;
};

enum class IntegrationStatus { Completed, Event, IntegratorFailure };

struct IntegrationResult {
    IntegrationStatus status = IntegrationStatus::Completed;
    EventRecord event;
    std::vector<double> times;               // sampled (strided) times
    std::vector<Eigen::VectorXd> states;     // matching samples
    Eigen::VectorXd final_state;
    double final_time = 0.0;
    long accepted_steps = 0;
};

/// Count of strict local extrema of the periodic sequence.
int count_extrema(const Eigen::VectorXd& u);

/// True when the grid values carry more strict local extrema than the initial
/// profile did (the grid-scale irregularity proxy).
bool detect_irregularity(const GridField& U, int baseline_extrema);

/// Integrate with event detection on every accepted step.
IntegrationResult integrate(const SimConfig& cfg);

/// One row of the critical-amplitude experiment.
struct SweepRecord {
    std::string model_id;
    int N = 0;
    int sign = +1;
    EventKind search_kind = EventKind::None;  // which event the search targeted
    std::optional<double> A_star;             // infimum event amplitude
    EventKind event = EventKind::None;
    std::optional<double> t_event;
};

struct AmplitudeSearchOptions {
    double A_start = 0.5;
    double A_cap = 1e4;             // give up beyond this amplitude
    double bisection_rel_width = 1e-3;
    double rel_tol = 1e-8;
};

/// Exponential bracketing (doubling from A_start until the filtered event
/// occurs or the cap is passed) followed by bisection on |A|; A_star is the
/// smallest amplitude known to produce the event.
SweepRecord critical_amplitude(const ModelSpec& model, const std::string& model_id, int N,
                               int sign, EventKind kind_filter,
                               const AmplitudeSearchOptions& opt = {});

struct SweepModel {
    ModelSpec spec;      // H is rewritten per N
    std::string id;
};

/// Cross product of critical_amplitude runs over models x N values x signs x
/// {instability, irregularity}, in deterministic order.  Cells run in
/// parallel up to HOLISTIC_THREADS (or hardware concurrency).
std::vector<SweepRecord> sweep(const std::vector<SweepModel>& models,
                               const std::vector<int>& n_values,
                               const AmplitudeSearchOptions& opt = {});

/// CSV with the stable column set model,N,sign,A_star,event,t_event.
std::string sweep_csv(const std::vector<SweepRecord>& records);

}  // namespace holistic
