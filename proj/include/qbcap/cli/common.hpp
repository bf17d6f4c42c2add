#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <string>
#include <string_view>
#include <system_error>
#include <thread>
#include <vector>

#include "qbcap/errors.hpp"

namespace qbcap::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitVerifyFailed = 2,
    kExitIo = 3,
};

// 12 significant digits, '.' separator, no locale. -0 prints as 0.
inline std::string format_number(double v) {
    if (v == 0.0) {
        v = 0.0;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string format_fixed(double v, int decimals = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    std::string s = buf;
    if (s.starts_with('-') && s.find_first_not_of("-0.") == std::string::npos) {
        s.erase(0, 1);
    }
    return s;
}

inline double parse_double(std::string_view text) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        throw DomainError("not a number: '" + std::string(text) + "'");
    }
    return v;
}

// Radians by default; a trailing "deg" means degrees ("30deg").
inline double parse_angle(std::string_view text) {
    constexpr std::string_view deg = "deg";
    if (text.ends_with(deg)) {
        text.remove_suffix(deg.size());
        return parse_double(text) * std::numbers::pi / 180.0;
    }
    return parse_double(text);
}

// count evenly spaced points with both ends included.
inline std::vector<double> linspace(double start, double stop, std::size_t count) {
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = start;
        return out;
    }
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    // Land exactly on the end point.
    out.back() = stop;
    return out;
}

// Runs body(i) for i in [0, n) on a few threads. Each index is visited once,
// so writing into slot i of a presized vector keeps output order fixed.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 16));
    if (workers == 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) {
                    body(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

} // namespace qbcap::cli
