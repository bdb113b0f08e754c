#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pcc/bounds.hpp"
#include "pcc/channel.hpp"
#include "pcc/code.hpp"
#include "pcc/decoders.hpp"
#include "pcc/errors.hpp"
#include "pcc/montecarlo.hpp"
#include "pcc/rng.hpp"
#include "pcc/version.hpp"

namespace py = pybind11;
using namespace pcc;

namespace {

BitBlock block_from_list(const std::vector<int>& bits) {
    return BitBlock::from_bits(std::span<const int>(bits.data(), bits.size()));
}

Decoder decoder_arg(const std::string& name) { return decoder_from_name(name); }

} // namespace

PYBIND11_MODULE(_pccsim, m) {
    m.attr("__version__") = kVersion;

    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<UndersampledError>(m, "UndersampledError", PyExc_RuntimeError);

    py::class_<BitBlock>(m, "BitBlock")
        .def(py::init(&block_from_list), py::arg("bits"))
        .def_property_readonly("bits", &BitBlock::to_vector)
        .def("__len__", &BitBlock::size)
        .def("__getitem__", [](const BitBlock& b, int i) { return b.bit(i); })
        .def("__eq__", [](const BitBlock& a, const BitBlock& b) { return a == b; })
        .def("weight", &BitBlock::weight)
        .def("__repr__", [](const BitBlock& b) { return "BitBlock(" + b.to_string() + ")"; });

    py::class_<CodeParams>(m, "CodeParams")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &CodeParams::n)
        .def_property_readonly("k", &CodeParams::k)
        .def_property_readonly("rate", &CodeParams::rate)
        .def_property_readonly("d_min", &CodeParams::d_min)
        .def_property_readonly("t", &CodeParams::t);

    m.def("encode", [](const std::vector<int>& data) { return encode(block_from_list(data)); });
    m.def("encode", py::overload_cast<const BitBlock&>(&encode));
    m.def("parity_ok",
          [](const std::vector<int>& word) { return parity_ok(block_from_list(word)); });
    m.def("parity_ok", py::overload_cast<const BitBlock&>(&parity_ok));
    m.def("generator_matrix", [](const CodeParams& p) {
        std::vector<std::vector<int>> rows;
        for (const auto& row : generator_matrix(p)) rows.push_back(row.to_vector());
        return rows;
    });
    m.def("parity_check_matrix",
          [](const CodeParams& p) { return parity_check_matrix(p).to_vector(); });

    py::class_<Rng>(m, "Rng").def(py::init<std::uint64_t>(), py::arg("seed"));

    py::class_<SnrPoint>(m, "SnrPoint")
        .def_static("from_db", [](double db, double rate) { return SnrPoint::from_db(db, rate); },
                    py::arg("gamma_b_db"), py::arg("rate"))
        .def_readonly("gamma_b_db", &SnrPoint::gamma_b_db)
        .def_readonly("gamma_b", &SnrPoint::gamma_b)
        .def_readonly("gamma_c", &SnrPoint::gamma_c);

    py::class_<ChannelObservation>(m, "ChannelObservation")
        .def(py::init([](std::vector<double> r, std::vector<double> h, double gamma_c) {
                 return ChannelObservation{std::move(r), std::move(h), gamma_c};
             }),
             py::arg("r"), py::arg("h"), py::arg("gamma_c") = 1.0)
        .def_readonly("r", &ChannelObservation::r)
        .def_readonly("h", &ChannelObservation::h)
        .def_readonly("gamma_c", &ChannelObservation::gamma_c);

    m.def("bpsk_map", [](const std::vector<int>& w) { return bpsk_map(block_from_list(w)); });
    m.def("bpsk_map", py::overload_cast<const BitBlock&>(&bpsk_map));
    m.def("rayleigh_sample", &rayleigh_sample, py::arg("rng"));
    m.def("transmit", &transmit, py::arg("codeword"), py::arg("snr"), py::arg("rng"));

    py::class_<DecodeResult>(m, "DecodeResult")
        .def_readonly("codeword_estimate", &DecodeResult::codeword_estimate)
        .def_readonly("flipped_index", &DecodeResult::flipped_index)
        .def_property_readonly("data_estimate", &DecodeResult::data_estimate);

    m.def("hard_decide",
          [](const std::vector<double>& r) { return hard_decide(std::span<const double>(r)); });
    m.def("flip_decode", [](const std::vector<double>& r, const std::vector<double>& h) {
        return flip_decode(std::span<const double>(r), std::span<const double>(h));
    });
    m.def(
        "soft_ml_decode",
        [](const std::vector<double>& r, const std::vector<double>& h, int cap) {
            return soft_ml_decode(std::span<const double>(r), std::span<const double>(h), cap);
        },
        py::arg("r"), py::arg("h"), py::arg("max_block_length") = kSoftMlDefaultCap);
    m.def("wagner_decode", [](const std::vector<double>& r, const std::vector<double>& h) {
        return wagner_decode(std::span<const double>(r), std::span<const double>(h));
    });
    m.def(
        "decode_throughput_probe",
        [](const std::string& decoder, int n, long long trials) {
            return decode_throughput_probe(decoder_arg(decoder), n, trials);
        },
        py::arg("decoder"), py::arg("n"), py::arg("trials"));

    m.def("q_function", &q_function);
    m.def("beta_param", &beta_param);
    m.def("hard_bound", &hard_bound);
    m.def("soft_bound", &soft_bound);
    m.def("chernoff_pbar", &chernoff_pbar);
    m.def("two_or_more_bound", &two_or_more_bound);
    m.def("order_stat_pdf_second", [](const CodeParams& p, double gamma_c, double x) {
        return order_stat_pdf(OrderStat::second, p, gamma_c, x);
    });
    m.def("order_stat_pdf_largest", [](const CodeParams& p, double gamma_c, double x) {
        return order_stat_pdf(OrderStat::largest, p, gamma_c, x);
    });
    m.def("p2_bar", &p2_bar);
    m.def("pn_bar", &pn_bar);
    m.def("one_error_bound", &one_error_bound);
    m.def("one_error_bound_component_form", &one_error_bound_component_form);
    m.def("fd_bound", &fd_bound);
    m.def("fd_bound_components", &fd_bound_components);
    m.def(
        "diversity_slope",
        [](const std::vector<std::pair<double, double>>& curve, double window_decades) {
            return diversity_slope(
                std::span<const std::pair<double, double>>(curve.data(), curve.size()),
                window_decades);
        },
        py::arg("curve"), py::arg("window_decades") = 2.0);

    py::class_<SimulationConfig>(m, "SimulationConfig")
        .def(py::init<>())
        .def_readwrite("code_lengths", &SimulationConfig::code_lengths)
        .def_readwrite("snr_grid_db", &SimulationConfig::snr_grid_db)
        .def_readwrite("min_bit_errors", &SimulationConfig::min_bit_errors)
        .def_readwrite("max_blocks", &SimulationConfig::max_blocks)
        .def_readwrite("seed", &SimulationConfig::seed)
        .def_readwrite("workers", &SimulationConfig::workers)
        .def_readwrite("soft_ml_cap", &SimulationConfig::soft_ml_cap)
        .def_property(
            "decoders",
            [](const SimulationConfig& c) {
                std::vector<std::string> names;
                for (Decoder d : c.decoders) names.push_back(decoder_name(d));
                return names;
            },
            [](SimulationConfig& c, const std::vector<std::string>& names) {
                c.decoders.clear();
                for (const auto& name : names) c.decoders.push_back(decoder_from_name(name));
            })
        .def_property(
            "sigma_override",
            [](const SimulationConfig& c) { return c.sigma_override; },
            [](SimulationConfig& c, std::optional<double> v) { c.sigma_override = v; });

    py::class_<BerEstimate>(m, "BerEstimate")
        .def_readonly("blocks", &BerEstimate::blocks)
        .def_readonly("block_errors", &BerEstimate::block_errors)
        .def_readonly("bits", &BerEstimate::bits)
        .def_readonly("bit_errors", &BerEstimate::bit_errors)
        .def_readonly("all_bits", &BerEstimate::all_bits)
        .def_readonly("all_bit_errors", &BerEstimate::all_bit_errors)
        .def_readonly("capped", &BerEstimate::capped)
        .def_property_readonly("ber", &BerEstimate::ber)
        .def_property_readonly("ber_all", &BerEstimate::ber_all)
        .def_property_readonly("bler", &BerEstimate::bler)
        .def_property_readonly("ci95_halfwidth", &BerEstimate::ci95_halfwidth);

    py::class_<CellResult>(m, "CellResult")
        .def_readonly("n", &CellResult::n)
        .def_property_readonly("decoder",
                               [](const CellResult& c) { return decoder_name(c.decoder); })
        .def_readonly("gamma_b_db", &CellResult::gamma_b_db)
        .def_readonly("gamma_c", &CellResult::gamma_c)
        .def_readonly("estimate", &CellResult::estimate)
        .def_readonly("error", &CellResult::error)
        .def("ok", &CellResult::ok);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("cells", &SweepResult::cells);

    m.def(
        "run_cell",
        [](int n, const std::string& decoder, double gamma_b_db, const SimulationConfig& config,
           std::uint64_t cell_seed) {
            const CodeParams params(n);
            return run_cell(params, decoder_arg(decoder), SnrPoint::from_db(gamma_b_db, params),
                            config, cell_seed);
        },
        py::arg("n"), py::arg("decoder"), py::arg("gamma_b_db"), py::arg("config"),
        py::arg("cell_seed"), py::call_guard<py::gil_scoped_release>());
    m.def("run_sweep", [](const SimulationConfig& config) { return run_sweep(config); },
          py::arg("config"), py::call_guard<py::gil_scoped_release>());
    m.def(
        "measure_diversity",
        [](const SweepResult& sweep, const std::string& decoder, int n, double window) {
            return measure_diversity(sweep, decoder_arg(decoder), n, window);
        },
        py::arg("sweep"), py::arg("decoder"), py::arg("n"), py::arg("window_decades") = 2.0);
}
