#ifndef ISQ_CLI_UTIL_HPP
#define ISQ_CLI_UTIL_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace isqcli {

// Exit codes shared across subcommands.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_numerical = 2;
inline constexpr int exit_inconclusive = 3;

/// Grid request "min:max:n[:log]".
struct GridSpec {
    double min = 0.0, max = 0.0;
    int count = 0;
    bool log_spacing = false;

    static GridSpec parse(const std::string& text) {
        GridSpec g;
        std::vector<std::string> parts;
        size_t pos = 0;
        while (pos <= text.size()) {
            const size_t next = text.find(':', pos);
            parts.push_back(text.substr(pos, next == std::string::npos ? next : next - pos));
            if (next == std::string::npos)
                break;
            pos = next + 1;
        }
        if (parts.size() < 3 || parts.size() > 4)
            throw std::invalid_argument("grid spec must be min:max:n[:log]");
        g.min = std::stod(parts[0]);
        g.max = std::stod(parts[1]);
        g.count = std::stoi(parts[2]);
        if (parts.size() == 4) {
            if (parts[3] == "log")
                g.log_spacing = true;
            else if (parts[3] != "linear")
                throw std::invalid_argument("grid spacing must be 'linear' or 'log'");
        }
        if (!(g.max > g.min) || g.count < 1)
            throw std::invalid_argument("grid spec requires min < max and n >= 1");
        if (g.log_spacing && !(g.min > 0.0))
            throw std::invalid_argument("log grid requires min > 0");
        return g;
    }

    std::vector<double> points() const {
        std::vector<double> out(count);
        if (count == 1) {
            out[0] = min;
            return out;
        }
        if (log_spacing) {
            const double lmin = std::log(min), lmax = std::log(max);
            for (int i = 0; i < count; ++i)
                out[i] = std::exp(lmin + (lmax - lmin) * i / (count - 1));
        } else {
            for (int i = 0; i < count; ++i)
                out[i] = min + (max - min) * i / (count - 1);
        }
        return out;
    }
};

inline unsigned thread_count() {
    if (const char* env = std::getenv("ISQ_SPECTRAL_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1)
            return std::min(n, 256);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1u;
}

/// Static-partition parallel map over [0, n); deterministic regardless of
/// the worker count because each index writes its own slot.
inline void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
    const unsigned workers = std::min<size_t>(thread_count(), std::max<size_t>(n, 1));
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                const size_t lo = w * chunk, hi = std::min(n, lo + chunk);
                for (size_t i = lo; i < hi; ++i)
                    fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

/// Shortest round-trip decimal form of a double (matches the JSON writer).
inline std::string format_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

} // namespace isqcli

#endif
