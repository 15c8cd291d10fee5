#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "secmimo/analytic.hpp"
#include "secmimo/errors.hpp"
#include "secmimo/experiments.hpp"
#include "secmimo/model.hpp"
#include "secmimo/montecarlo.hpp"
#include "secmimo/schemes.hpp"

namespace py = pybind11;
using namespace secmimo;

PYBIND11_MODULE(_secmimo, m) {
    m.doc() = "Zero-secrecy-capacity probabilities for multi-antenna wiretap links";

    // Input problems become ValueError, numerical breakdowns ArithmeticError,
    // file problems OSError; anything else keeps pybind11's defaults.
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const validation_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const numerical_error& e) {
            PyErr_SetString(PyExc_ArithmeticError, e.what());
        } catch (const io_error& e) {
            PyErr_SetString(PyExc_OSError, e.what());
        }
    });
#ifdef SECMIMO_VERSION_STR
    m.attr("__version__") = SECMIMO_VERSION_STR;
#else
    m.attr("__version__") = kVersion;
#endif

    py::enum_<SchemeKind>(m, "SchemeKind")
        .value("STT", SchemeKind::STT)
        .value("SAS", SchemeKind::SAS)
        .value("OAS", SchemeKind::OAS);

    py::class_<SystemConfig>(m, "SystemConfig")
        .def(py::init<>())
        .def_readwrite("m_tx", &SystemConfig::m_tx)
        .def_readwrite("n_dest", &SystemConfig::n_dest)
        .def_readwrite("n_eve", &SystemConfig::n_eve)
        .def_readwrite("sigma2_sd", &SystemConfig::sigma2_sd)
        .def_readwrite("sigma2_se", &SystemConfig::sigma2_se)
        .def_readwrite("snr", &SystemConfig::snr)
        .def("mer", &SystemConfig::mer)
        .def("validate", &SystemConfig::validate);

    py::class_<EstimateWithCI>(m, "EstimateWithCI")
        .def_readonly("p_hat", &EstimateWithCI::p_hat)
        .def_readonly("ci_low", &EstimateWithCI::ci_low)
        .def_readonly("ci_high", &EstimateWithCI::ci_high)
        .def_readonly("n_samples", &EstimateWithCI::n_samples)
        .def_readonly("n_events", &EstimateWithCI::n_events)
        .def_readonly("seed", &EstimateWithCI::seed);

    py::class_<AsymptoticBoundPair>(m, "AsymptoticBoundPair")
        .def_readonly("lower_coeff", &AsymptoticBoundPair::lower_coeff)
        .def_readonly("upper_coeff", &AsymptoticBoundPair::upper_coeff)
        .def_readonly("exponent", &AsymptoticBoundPair::exponent);

    py::class_<MomentPair>(m, "MomentPair")
        .def_readonly("ez", &MomentPair::ez)
        .def_readonly("ez2", &MomentPair::ez2);

    m.def("make_iid_config", &make_iid_config, py::arg("m_tx"), py::arg("n_dest"),
          py::arg("n_eve"), py::arg("mer"), py::arg("snr") = 1.0);
    m.def("db_to_linear", &db_to_linear);
    m.def("linear_to_db", &linear_to_db);

    m.def("p_zero_stt", &p_zero_stt, py::arg("m_tx"), py::arg("n_dest"), py::arg("n_eve"),
          py::arg("mer"));
    m.def("p_zero_oas", &p_zero_oas, py::arg("m_tx"), py::arg("n_dest"), py::arg("n_eve"),
          py::arg("mer"));
    m.def("p_zero_sas", &p_zero_sas, py::arg("m_tx"), py::arg("n_dest"), py::arg("n_eve"),
          py::arg("mer"), py::arg("rel_tol") = 1e-9);

    m.def("max_exp_cdf",
          static_cast<double (*)(const std::vector<double>&, double)>(&max_exp_cdf),
          py::arg("means"), py::arg("x"));
    m.def("max_exp_pdf",
          static_cast<double (*)(const std::vector<double>&, double)>(&max_exp_pdf),
          py::arg("means"), py::arg("x"));

    m.def("stt_bounds_asymptotic", &stt_bounds_asymptotic);
    m.def("oas_bounds_asymptotic", &oas_bounds_asymptotic);
    m.def("sas_bounds_asymptotic", &sas_bounds_asymptotic);
    m.def("theorem1_moments", &theorem1_moments, py::arg("cfg"), py::arg("i"), py::arg("j"));

    m.def("estimate", &estimate, py::arg("scheme"), py::arg("cfg"), py::arg("n_samples"),
          py::arg("seed"));
    m.def("estimate_partitioned", &estimate_partitioned, py::arg("scheme"), py::arg("cfg"),
          py::arg("n_samples"), py::arg("seed"), py::arg("partitions"));
}
