#include "decisum/bench.hpp"
#include "decisum/decode.hpp"
#include "decisum/enumerator.hpp"
#include "decisum/errors.hpp"
#include "decisum/oracle.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace decisum;

namespace {

Direction parse_direction(const std::string& d) {
    if (d == "min") {
        return Direction::Min;
    }
    if (d == "max") {
        return Direction::Max;
    }
    throw py::value_error("direction must be 'min' or 'max'");
}

Checksum parse_checksum(const std::string& c) {
    if (c == "none") {
        return Checksum::None;
    }
    if (c == "parity") {
        return Checksum::ParityEven;
    }
    if (c == "crc8") {
        return Checksum::Crc8;
    }
    throw py::value_error("checksum must be 'none', 'parity' or 'crc8'");
}

py::tuple ranked_tuple(const RankedChoice& r) {
    return py::make_tuple(r.rank, r.sum, r.selection);
}

py::list ranked_list(const std::vector<RankedChoice>& results) {
    py::list out;
    for (const auto& r : results) {
        out.append(ranked_tuple(r));
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Enumerate choice combinations of number pairs in order of their sums";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<NonFiniteInput>(m, "NonFiniteInput", base.ptr());
    py::register_exception<EmptyInput>(m, "EmptyInput", base.ptr());
    py::register_exception<LengthMismatch>(m, "LengthMismatch", base.ptr());
    py::register_exception<IndexOutOfRange>(m, "IndexOutOfRange", base.ptr());
    py::register_exception<InvalidK>(m, "InvalidK", base.ptr());
    py::register_exception<TooLarge>(m, "TooLarge", base.ptr());
    py::register_exception<DegenerateFit>(m, "DegenerateFit", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    py::class_<ProblemInstance, std::shared_ptr<ProblemInstance>>(m, "ProblemInstance")
        .def_static(
            "normalize",
            [](const PairList& pairs, const std::string& direction) {
                return std::make_shared<ProblemInstance>(ProblemInstance::normalize(pairs, parse_direction(direction)));
            },
            py::arg("pairs"), py::arg("direction") = "min")
        .def_property_readonly("size", &ProblemInstance::size)
        .def_property_readonly("v0", [](const ProblemInstance& p) { return std::vector<double>(p.v0().begin(), p.v0().end()); })
        .def_property_readonly("v1", [](const ProblemInstance& p) { return std::vector<double>(p.v1().begin(), p.v1().end()); })
        .def_property_readonly("delta",
                               [](const ProblemInstance& p) { return std::vector<double>(p.delta().begin(), p.delta().end()); })
        .def_property_readonly(
            "perm", [](const ProblemInstance& p) { return std::vector<std::size_t>(p.perm().begin(), p.perm().end()); })
        .def_property_readonly("flip_mask", [](const ProblemInstance& p) {
            return std::vector<std::uint8_t>(p.flip_mask().begin(), p.flip_mask().end());
        })
        .def_property_readonly("s1", &ProblemInstance::s1)
        .def("score", [](const ProblemInstance& p, const std::string& bits) { return p.score(Combination::from_string(bits)); })
        .def("denormalize",
             [](const ProblemInstance& p, const std::string& bits) { return p.denormalize(Combination::from_string(bits)); });

    py::class_<Enumerator>(m, "Enumerator")
        .def(py::init([](std::shared_ptr<ProblemInstance> inst) {
                 return Enumerator(std::const_pointer_cast<const ProblemInstance>(inst));
             }),
             py::arg("instance"))
        .def("advance",
             [](Enumerator& e) -> py::object {
                 auto next = e.advance();
                 if (!next) {
                     return py::none();
                 }
                 return py::make_tuple(next->combo.to_string(), next->sum);
             })
        .def("next_ranked",
             [](Enumerator& e) -> py::object {
                 auto next = e.next_ranked();
                 if (!next) {
                     return py::none();
                 }
                 return ranked_tuple(*next);
             })
        .def_property_readonly("pending_size", &Enumerator::pending_size)
        .def_property_readonly("emitted_count", &Enumerator::emitted_count)
        .def_property_readonly("exhausted", &Enumerator::exhausted);

    m.def("shift", [](const std::string& bits, std::size_t position) {
        return shift(Combination::from_string(bits), position).to_string();
    });
    m.def("successors", [](const std::string& bits) {
        std::vector<std::string> out;
        for (const auto& c : successors(Combination::from_string(bits))) {
            out.push_back(c.to_string());
        }
        return out;
    });
    m.def(
        "top_k",
        [](const PairList& pairs, std::uint64_t k, const std::string& direction) {
            return ranked_list(top_k(pairs, k, parse_direction(direction)));
        },
        py::arg("pairs"), py::arg("k"), py::arg("direction") = "min",
        "List of (rank, sum, selection) for the k smallest or largest sums.");
    m.def(
        "brute_force_top_k",
        [](const PairList& pairs, std::uint64_t k, const std::string& direction) {
            return ranked_list(oracle::brute_force_top_k(pairs, k, parse_direction(direction)));
        },
        py::arg("pairs"), py::arg("k"), py::arg("direction") = "min");

    m.def("crc8", [](const std::vector<std::uint8_t>& bits) { return crc8(bits); });
    m.def("crc8_bytes", [](const py::bytes& data) { return crc8_bytes(std::string(data)); });
    m.def(
        "decode",
        [](const ConfidenceSequence& conf, const std::string& checksum, std::uint64_t max_candidates) {
            const auto r = decode(conf, parse_checksum(checksum), max_candidates);
            py::dict out;
            out["found"] = r.found;
            out["rank"] = r.rank;
            out["bits"] = r.bits;
            out["confidence"] = r.confidence;
            out["tested"] = r.tested;
            return out;
        },
        py::arg("confidences"), py::arg("checksum") = "none", py::arg("max_candidates") = 1000000);

    m.def(
        "run_bench",
        [](const std::vector<std::size_t>& n_values, std::uint64_t k_max, std::size_t samples, std::size_t trials,
           std::uint64_t seed, std::size_t repeats) {
            bench::BenchConfig config;
            config.n_values = n_values;
            config.k_max = k_max;
            config.k_samples = samples;
            config.trials = trials;
            config.seed = seed;
            config.timing_repeats = repeats;
            py::list out;
            for (const auto& r : bench::run_bench(config)) {
                py::dict row;
                row["n"] = r.n;
                row["k"] = r.k;
                row["pending_size"] = r.pending_size;
                row["elapsed_s"] = r.elapsed_s;
                row["trial"] = r.trial;
                row["seed"] = r.seed;
                out.append(row);
            }
            return out;
        },
        py::arg("n_values"), py::arg("k_max"), py::arg("samples") = 50, py::arg("trials") = 1, py::arg("seed") = 42,
        py::arg("repeats") = 3);
    m.def("fit_polynomial", [](const std::vector<double>& xs, const std::vector<double>& ys, std::size_t degree) {
        const auto fit = bench::fit_polynomial(xs, ys, degree);
        return py::make_tuple(fit.coefficients, fit.r_squared);
    });
}
