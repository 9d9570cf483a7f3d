#pragma once

#include <chrono>
#include <optional>

#include "conecert/operators.hpp"

namespace conecert {

struct KernelReport {
    int p = 0, q = 0;
    int dim = 0;
    // One exact kernel element when dim > 0 (a counterexample witness).
    std::optional<BiPoly> witness;
};

enum class Verdict { NonHarmonic, CounterexampleFound, Partial };

// Finite-degree certificate: every kernel of Q -> Delta(H^s Q) on P_{p,q},
// 0 <= p <= p_max, 0 <= q <= q_max, is {0}, plus irreducibility of H. This
// proves H^s vanishes on no harmonic zero set up to bidegree
// (p_max + s, q_max + s); the bound is part of the verdict, never universal.
struct Certificate {
    ExactComplex a;
    int n = 2;
    int s = 1;
    int p_max = 0, q_max = 0;
    std::vector<KernelReport> kernels;  // lex order over (p,q)
    int irreducible_rank = 0;           // rank of I + a E_12; reducible iff 1
    std::vector<std::pair<int, int>> untested;  // nonempty -> resource limit hit

    Verdict verdict() const;
    std::string verdict_string() const;
};

struct CertifyOptions {
    int threads = 0;  // 0: CONECERT_THREADS env, then hardware concurrency
    std::optional<std::chrono::milliseconds> time_budget;
};

Certificate certify_nonharmonic(const ExactComplex& a, int n, int p_max, int q_max, int s = 1,
                                const CertifyOptions& options = {});

// Worker count resolution shared by all concurrent paths.
int resolve_thread_count(int requested);

}  // namespace conecert
