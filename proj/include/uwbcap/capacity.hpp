#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"

// Closed-form IR-UWB channel capacity for the two transceiver styles.
//
// Mostly digital:  C = 1 / (n_sampling / F_s + d_RMS)
// Analog:          C = 1 / (1 / F_circuit + d_RMS)
//
// Both families share the 1/d_RMS asymptote: however fast the front end, the
// per-symbol guard time spent waiting out the multipath tail bounds the rate.

namespace uwbcap {

inline constexpr double default_sampling_factor = 4.0;

/// Data-converter front end of a mostly digital transceiver.
struct digital_front_end {
    double sampling_frequency = 0.0;            ///< F_s in Hz
    double sampling_factor = default_sampling_factor;  ///< F_s over analog max frequency, >= 1
    std::optional<int> resolution_bits{};       ///< informational only

    void validate() const {
        if (!(sampling_frequency > 0.0))
            throw std::domain_error("sampling_frequency must be > 0");
        if (!(sampling_factor >= 1.0))
            throw std::domain_error("sampling_factor must be >= 1");
        if (resolution_bits && *resolution_bits <= 0)
            throw std::domain_error("resolution_bits must be positive");
    }
};

/// Analog transceiver front end, reduced to its binding constraint: the
/// minimum operating frequency among all analog circuits.
struct analog_front_end {
    double min_operating_frequency = 0.0;  ///< F_circuit in Hz

    void validate() const {
        if (!(min_operating_frequency > 0.0))
            throw std::domain_error("min_operating_frequency must be > 0");
    }
};

enum class mary_mode {
    paper_table,  ///< factor M - 1, reproduces the published M-ary columns
    log2,         ///< factor log2(M), the conventional bits-per-symbol scaling
};

struct modulation_scheme {
    int order = 2;
    mary_mode mode = mary_mode::paper_table;

    void validate() const {
        if (order < 2) throw std::domain_error("modulation order must be >= 2");
    }
};

/// Scaling applied to a binary capacity for the given scheme; 1 for M = 2 in
/// either mode.
inline double mary_factor(const modulation_scheme& scheme) {
    scheme.validate();
    return scheme.mode == mary_mode::paper_table ? static_cast<double>(scheme.order - 1)
                                                 : std::log2(static_cast<double>(scheme.order));
}

struct capacity_result {
    double capacity = 0.0;         ///< bits/s
    double asymptote = 0.0;        ///< 1/d_RMS in bits/s; +inf for an ideal channel
    double fraction_of_max = 0.0;  ///< capacity / asymptote; 0 for an ideal channel
};

namespace detail {

inline capacity_result finish_capacity(double capacity, double d_rms) {
    capacity_result r;
    r.capacity = capacity;
    r.asymptote = d_rms > 0.0 ? 1.0 / d_rms : std::numeric_limits<double>::infinity();
    r.fraction_of_max = r.capacity / r.asymptote;
    return r;
}

inline void require_delay_spread(double d_rms) {
    if (!(d_rms >= 0.0)) throw std::domain_error("rms delay spread must be >= 0");
}

}  // namespace detail

inline capacity_result capacity_mostly_digital(const digital_front_end& fe, double d_rms) {
    fe.validate();
    detail::require_delay_spread(d_rms);
    return detail::finish_capacity(
        1.0 / (fe.sampling_factor / fe.sampling_frequency + d_rms), d_rms);
}

inline capacity_result capacity_analog(const analog_front_end& fe, double d_rms) {
    fe.validate();
    detail::require_delay_spread(d_rms);
    return detail::finish_capacity(1.0 / (1.0 / fe.min_operating_frequency + d_rms), d_rms);
}

inline double capacity_mary(double binary_capacity, const modulation_scheme& scheme) {
    if (!(binary_capacity > 0.0)) throw std::domain_error("binary capacity must be > 0");
    return binary_capacity * mary_factor(scheme);
}

/// 1/d_RMS; undefined for an ideal channel.
inline double capacity_asymptote(double d_rms) {
    if (!(d_rms > 0.0))
        throw std::domain_error("asymptote undefined: rms delay spread must be > 0");
    return 1.0 / d_rms;
}

/// Achieved share of the delay-spread-limited maximum, in percent.
inline double percent_of_max(const digital_front_end& fe, double d_rms) {
    fe.validate();
    if (!(d_rms > 0.0))
        throw std::domain_error("percent of max undefined: rms delay spread must be > 0");
    return 100.0 * d_rms / (fe.sampling_factor / fe.sampling_frequency + d_rms);
}

enum class impl_kind { mostly_digital, analog };

/// Inverts the capacity formulas: the frequency (F_s or F_circuit) needed to
/// reach `target_rate` over a channel with the given delay spread.
inline double required_frequency(double target_rate, double d_rms, impl_kind kind,
                                 double sampling_factor = 1.0) {
    if (!(target_rate > 0.0)) throw std::domain_error("target rate must be > 0");
    detail::require_delay_spread(d_rms);
    if (kind == impl_kind::mostly_digital && !(sampling_factor >= 1.0))
        throw std::domain_error("sampling_factor must be >= 1");
    const double budget = 1.0 / target_rate - d_rms;
    if (!(budget > 0.0))
        throw infeasible_target_error(
            "target rate is at or above the 1/d_RMS asymptote; no operating frequency suffices");
    return kind == impl_kind::mostly_digital ? sampling_factor / budget : 1.0 / budget;
}

/// Inclusive arithmetic frequency grid.
struct frequency_range {
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;

    std::vector<double> points() const {
        if (!(start > 0.0) || !(stop >= start) || !(step > 0.0))
            throw std::invalid_argument("empty frequency range");
        const auto count = static_cast<std::size_t>((stop - start) / step + 1e-9) + 1;
        std::vector<double> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
        return out;
    }
};

enum class sweep_quantity { capacity, percent_of_max };

struct sweep_cell {
    double d_rms = 0.0;
    double frequency = 0.0;
    double value = 0.0;  ///< bits/s or percent, per quantity
    bool ok = true;
    std::string error;
};

/// Cross product of delay spreads and frequencies. Cells whose inputs violate
/// a precondition are flagged rather than failing the whole sweep.
inline std::vector<sweep_cell> sweep_capacity(std::span<const double> d_rms_list,
                                              std::span<const double> frequencies, impl_kind kind,
                                              double sampling_factor = 1.0,
                                              sweep_quantity quantity = sweep_quantity::capacity) {
    std::vector<sweep_cell> cells;
    cells.reserve(d_rms_list.size() * frequencies.size());
    for (double d : d_rms_list) {
        for (double f : frequencies) {
            sweep_cell cell{d, f, 0.0, true, {}};
            try {
                if (quantity == sweep_quantity::percent_of_max) {
                    if (kind == impl_kind::analog)
                        cell.value = percent_of_max({f, 1.0}, d);
                    else
                        cell.value = percent_of_max({f, sampling_factor}, d);
                } else if (kind == impl_kind::analog) {
                    cell.value = capacity_analog({f}, d).capacity;
                } else {
                    cell.value = capacity_mostly_digital({f, sampling_factor}, d).capacity;
                }
            } catch (const std::exception& e) {
                cell.ok = false;
                cell.error = e.what();
            }
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

inline std::vector<sweep_cell> sweep_capacity(std::span<const double> d_rms_list,
                                              const frequency_range& range, impl_kind kind,
                                              double sampling_factor = 1.0,
                                              sweep_quantity quantity = sweep_quantity::capacity) {
    const auto freqs = range.points();
    return sweep_capacity(d_rms_list, freqs, kind, sampling_factor, quantity);
}

}  // namespace uwbcap
