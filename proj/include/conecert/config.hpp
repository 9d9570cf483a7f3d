#pragma once

namespace conecert {

// Numeric knobs shared by the tsm layer and the CLI. Two-degree comparison
// (quad_degree vs quad_degree_check) is the error estimate everywhere.
struct NumericConfig {
    int quad_degree = 40;
    int quad_degree_check = 48;
    int hermite_degree = 30;
    int laguerre_points = 64;
    double abs_tol = 1e-8;
    double rel_tol = 1e-6;
    int threads = 0;  // 0: CONECERT_THREADS env, then hardware concurrency
};

}  // namespace conecert
