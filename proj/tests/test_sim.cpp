#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "holistic/diffusion_series.hpp"
#include "holistic/grid_ops.hpp"
#include "holistic/sim.hpp"

using namespace holistic;

namespace {

SimConfig fig_config(const ModelSpec& model, int N, double A) {
    SimConfig cfg;
    cfg.model = model;
    cfg.N = N;
    cfg.A = A;
    return cfg;
}

}  // namespace

TEST_CASE("zero amplitude stays identically zero") {
    SimConfig cfg = fig_config(ModelSpec::holistic1(1.0, 1.0, 1.0), 8, 0.0);
    const IntegrationResult r = integrate(cfg);
    CHECK(r.status == IntegrationStatus::Completed);
    CHECK(r.event.kind == EventKind::None);
    CHECK(r.final_state.lpNorm<Eigen::Infinity>() == 0.0);
    CHECK(r.final_time == doctest::Approx(10.0));
}

TEST_CASE("extrema counting") {
    CHECK(count_extrema(Eigen::VectorXd::Constant(6, 1.0)) == 0);
    CHECK(count_extrema(sine_field(8, 1.0).values) == 2);
    // A grid-scale sawtooth large enough to break the monotone runs of the
    // sine (the inter-sample rise is 0.293, so +-0.25 flips an ordering).
    Eigen::VectorXd ragged = sine_field(8, 1.0).values;
    for (int j = 0; j < 8; ++j) ragged[j] += 0.25 * ((j % 2) ? 1.0 : -1.0);
    CHECK(count_extrema(ragged) > 2);
    CHECK(detect_irregularity(GridField(ragged, 1.0), 2));
    CHECK_FALSE(detect_irregularity(sine_field(8, 1.0), 2));
}

TEST_CASE("diffusion trajectory decays at the constructed rate") {
    const int N = 8;
    const double kappa = 2.0 * M_PI / N;
    const SymbolSeries series = construct_diffusion_symbol(2);
    for (int order : {1, 2}) {
        SimConfig cfg = fig_config(ModelSpec::diffusion(order, 1.0, 1.0), N, 1.0);
        cfg.T = 1.0;
        const IntegrationResult r = integrate(cfg);
        REQUIRE(r.status == IntegrationStatus::Completed);
        const double H = 2.0 * M_PI / N;
        const double ratio = r.final_state.norm() / sine_field(N, 1.0).values.norm();
        const double fitted = std::log(ratio) / 1.0;
        const double expected = decay_rate(series, kappa, 1.0, order) / (H * H);
        CHECK(std::abs(fitted - expected) < 0.01 * std::abs(expected));
    }
}

TEST_CASE("monotone norm decay for the diffusion closure") {
    SimConfig cfg = fig_config(ModelSpec::diffusion(1, 1.0, 1.0), 8, 1.0);
    cfg.T = 1.0;
    const IntegrationResult r = integrate(cfg);
    REQUIRE(r.states.size() > 3);
    for (size_t i = 1; i < r.states.size(); ++i)
        CHECK(r.states[i].lpNorm<Eigen::Infinity>() <=
              r.states[i - 1].lpNorm<Eigen::Infinity>() + 1e-12);
}

TEST_CASE("advective three-point run blows up at large amplitude") {
    SimConfig cfg = fig_config(ModelSpec::mixture(0.0, 1.0, 1.0, 1.0), 3, 40.0);
    cfg.check_irregularity = false;
    const IntegrationResult r = integrate(cfg);
    CHECK(r.status == IntegrationStatus::Event);
    CHECK(r.event.kind == EventKind::Instability);
    CHECK(r.event.time < 10.0);
}

TEST_CASE("identical configurations give bit-identical trajectories") {
    SimConfig cfg = fig_config(ModelSpec::mixture(1.0, 1.0, 1.0, 1.0), 6, 1.5);
    cfg.T = 2.0;
    const IntegrationResult a = integrate(cfg);
    const IntegrationResult b = integrate(cfg);
    REQUIRE(a.states.size() == b.states.size());
    for (size_t i = 0; i < a.states.size(); ++i)
        CHECK((a.states[i] - b.states[i]).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("amplitude negation reflects the trajectory about the midpoint") {
    // The sine initial field is odd about x = pi, so the -A trajectory is the
    // image of the +A one under negation combined with j -> N/2 - j.
    const int N = 8;
    for (const ModelSpec& model :
         {ModelSpec::mixture(0.4, 1.0, 1.0, 1.0), ModelSpec::holistic1(1.0, 1.0, 1.0)}) {
        SimConfig plus = fig_config(model, N, 1.3);
        plus.T = 1.5;
        SimConfig minus = plus;
        minus.A = -1.3;
        const IntegrationResult rp = integrate(plus);
        const IntegrationResult rm = integrate(minus);
        REQUIRE(rp.status == IntegrationStatus::Completed);
        REQUIRE(rm.status == IntegrationStatus::Completed);
        Eigen::VectorXd mapped(N);
        for (int j = 0; j < N; ++j)
            mapped[j] = -rp.final_state[((N / 2 - j) % N + N) % N];
        CHECK((mapped - rm.final_state).lpNorm<Eigen::Infinity>() < 1e-6);

        // The +A trajectory itself keeps the odd symmetry about x = 0.
        const GridField self = reflect_negate(GridField(rp.final_state, 1.0));
        CHECK((self.values - rp.final_state).lpNorm<Eigen::Infinity>() < 1e-6);
    }
}

TEST_CASE("critical amplitude search on the stable model finds no instability") {
    AmplitudeSearchOptions opt;
    opt.A_cap = 64.0;  // small cap keeps the unit test quick
    const SweepRecord rec = critical_amplitude(ModelSpec::holistic1(1.0, 1.0, 1.0), "holistic1",
                                               3, +1, EventKind::Instability, opt);
    CHECK_FALSE(rec.A_star.has_value());
    CHECK(rec.event == EventKind::None);
}

TEST_CASE("critical amplitude search brackets the advective instability") {
    AmplitudeSearchOptions opt;
    opt.A_cap = 1024.0;
    const SweepRecord rec = critical_amplitude(ModelSpec::mixture(0.0, 1.0, 1.0, 1.0),
                                               "mixture:0", 3, +1, EventKind::Instability, opt);
    REQUIRE(rec.A_star.has_value());
    CHECK(rec.event == EventKind::Instability);
    CHECK(*rec.A_star > 0.5);
    CHECK(*rec.A_star < 1024.0);
    // infimum bracket: just below A_star no instability occurs
    SimConfig probe = fig_config(ModelSpec::mixture(0.0, 1.0, 1.0, 1.0), 3,
                                 *rec.A_star * (1.0 - 2e-3));
    probe.check_irregularity = false;
    CHECK(integrate(probe).event.kind == EventKind::None);
}

TEST_CASE("classification is robust to tightening the tolerance") {
    AmplitudeSearchOptions loose, tight;
    loose.A_cap = tight.A_cap = 256.0;
    tight.rel_tol = 1e-10;
    const ModelSpec model = ModelSpec::mixture(0.0, 1.0, 1.0, 1.0);
    for (EventKind kind : {EventKind::Instability, EventKind::Irregularity}) {
        const SweepRecord a = critical_amplitude(model, "adv", 3, +1, kind, loose);
        const SweepRecord b = critical_amplitude(model, "adv", 3, +1, kind, tight);
        CHECK(a.event == b.event);
        if (a.A_star && b.A_star) CHECK(std::abs(*a.A_star - *b.A_star) <
                                        5e-3 * std::max(*a.A_star, *b.A_star));
    }
}

TEST_CASE("single-cell sweep emits one record per sign and event kind") {
    AmplitudeSearchOptions opt;
    opt.A_cap = 64.0;
    const std::vector<SweepModel> models = {{ModelSpec::holistic1(1.0, 1.0, 1.0), "holistic1"}};
    const auto records = sweep(models, {3}, opt);
    CHECK(records.size() == 4);  // 2 signs x 2 event kinds
    const std::string csv = sweep_csv(records);
    CHECK(csv.rfind("model,N,sign,A_star,event,t_event\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}

TEST_CASE("configuration validation") {
    SimConfig cfg = fig_config(ModelSpec::mixture(0.5, 1.0, 1.0, 1.0), 2, 1.0);
    CHECK_THROWS_AS(integrate(cfg), std::invalid_argument);
    cfg.N = 8;
    cfg.T = -1.0;
    CHECK_THROWS_AS(integrate(cfg), std::invalid_argument);
}
