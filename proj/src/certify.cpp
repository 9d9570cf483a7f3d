#include "conecert/certify.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace conecert {

int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CONECERT_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

Verdict Certificate::verdict() const {
    for (const auto& k : kernels)
        if (k.dim > 0) return Verdict::CounterexampleFound;
    if (!untested.empty()) return Verdict::Partial;
    if (irreducible_rank < 2) return Verdict::CounterexampleFound;
    return Verdict::NonHarmonic;
}

std::string Certificate::verdict_string() const {
    switch (verdict()) {
        case Verdict::NonHarmonic: {
            std::ostringstream os;
            os << "non-harmonic-up-to-degree(" << p_max + s << "," << q_max + s << ")";
            return os.str();
        }
        case Verdict::CounterexampleFound:
            return "counterexample-found";
        default:
            return "partial";
    }
}

Certificate certify_nonharmonic(const ExactComplex& a, int n, int p_max, int q_max, int s,
                                const CertifyOptions& options) {
    if (a.is_zero())
        throw std::invalid_argument(
            "certify_nonharmonic: a = 0 degenerates H to |z|^2 with zero set {0}");
    if (n < 2) throw std::invalid_argument("certify_nonharmonic: requires n >= 2");
    if (s < 1) throw std::invalid_argument("certify_nonharmonic: requires s >= 1");
    if (p_max < 0 || q_max < 0)
        throw std::invalid_argument("certify_nonharmonic: negative degree bound");

    Certificate cert;
    cert.a = a;
    cert.n = n;
    cert.s = s;
    cert.p_max = p_max;
    cert.q_max = q_max;

    // Irreducibility of the (1,1)-form H: coefficient matrix I + a E_12 has
    // rank 1 iff H splits into (linear in z)(linear in zbar).
    ExactMatrix coeff = ExactMatrix::Constant(n, n, ExactComplex(0));
    for (int k = 0; k < n; ++k) coeff(k, k) = ExactComplex(1);
    coeff(0, 1) = coeff(0, 1) + a;
    cert.irreducible_rank = exact_rank(coeff);

    struct Task {
        int p, q;
    };
    std::vector<Task> tasks;
    for (int p = 0; p <= p_max; ++p)
        for (int q = 0; q <= q_max; ++q) tasks.push_back({p, q});

    std::vector<std::optional<KernelReport>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    const auto deadline = options.time_budget
                              ? std::optional(std::chrono::steady_clock::now() + *options.time_budget)
                              : std::nullopt;

    auto worker = [&] {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= tasks.size()) return;
            if (deadline && std::chrono::steady_clock::now() > *deadline) continue;
            const auto [p, q] = tasks[idx];
            const OperatorMatrix op = operator_matrix(n, p, q, OpDeltaMultH{a, s});
            const ExactMatrix kernel = kernel_basis(op.entries);
            KernelReport report{p, q, static_cast<int>(kernel.cols()), std::nullopt};
            if (kernel.cols() > 0) report.witness = op.domain.from_coordinates(kernel.col(0));
            results[idx] = std::move(report);
        }
    };

    const int nthreads = std::min<int>(resolve_thread_count(options.threads),
                                       static_cast<int>(tasks.size()));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Deterministic ordered reduction over (p,q) in lex order.
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (results[i])
            cert.kernels.push_back(std::move(*results[i]));
        else
            cert.untested.emplace_back(tasks[i].p, tasks[i].q);
    }
    return cert;
}

}  // namespace conecert
