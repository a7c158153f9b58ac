// Copyright 2026 The Monoscope Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Python bindings for the main operations: states, marginals, the
// correlation measures, monogamy scores, GGM, and bound verdicts.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monoscope/bounds.hpp"
#include "monoscope/errors.hpp"
#include "monoscope/experiment.hpp"
#include "monoscope/state_io.hpp"

namespace py = pybind11;
using namespace monoscope;

namespace {

py::array_t<std::complex<double>> matrix_to_numpy(const ComplexMatrix &m) {
    const auto d = static_cast<py::ssize_t>(m.dim());
    py::array_t<std::complex<double>> out({d, d});
    auto buf = out.mutable_unchecked<2>();
    for (py::ssize_t i = 0; i < d; ++i) {
        for (py::ssize_t j = 0; j < d; ++j) {
            buf(i, j) = m(i, j);
        }
    }
    return out;
}

ComplexMatrix numpy_to_matrix(const py::array_t<std::complex<double>> &arr) {
    if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1)) {
        throw InvalidAmplitudes("matrix must be square");
    }
    ComplexMatrix m(static_cast<std::size_t>(arr.shape(0)));
    auto buf = arr.unchecked<2>();
    for (py::ssize_t i = 0; i < arr.shape(0); ++i) {
        for (py::ssize_t j = 0; j < arr.shape(1); ++j) {
            m(i, j) = buf(i, j);
        }
    }
    return m;
}

MeasuredSide side_from_string(const std::string &s) {
    if (s == "A" || s == "a") {
        return MeasuredSide::A;
    }
    if (s == "B" || s == "b") {
        return MeasuredSide::B;
    }
    throw OutOfRange("measured side must be 'A' or 'B'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "bipartite quantum-correlation monogamy scores, GGM, and "
              "multiparty entanglement bounds for few-qubit pure states";

    py::register_exception<Error>(m, "MonoscopeError");

    py::class_<PureState>(m, "PureState")
        .def(py::init([](int n, const std::vector<std::complex<double>> &amps) {
                 return PureState::normalized(n, amps);
             }),
             py::arg("n_qubits"), py::arg("amplitudes"))
        .def_property_readonly("n_qubits", &PureState::n_qubits)
        .def_property_readonly("amplitudes",
                               [](const PureState &s) {
                                   return py::array_t<std::complex<double>>(
                                       static_cast<py::ssize_t>(s.dim()),
                                       s.amplitudes().data());
                               })
        .def("__repr__", [](const PureState &s) {
            return "<PureState n_qubits=" + std::to_string(s.n_qubits()) + ">";
        });

    py::class_<DensityOperator>(m, "DensityOperator")
        .def(py::init([](const std::vector<int> &labels,
                         const py::array_t<std::complex<double>> &matrix) {
                 return DensityOperator(labels, numpy_to_matrix(matrix));
             }),
             py::arg("qubit_labels"), py::arg("matrix"))
        .def_property_readonly("qubit_labels", &DensityOperator::qubit_labels)
        .def_property_readonly("n_qubits", &DensityOperator::n_qubits)
        .def_property_readonly("matrix", [](const DensityOperator &op) {
            return matrix_to_numpy(op.matrix());
        });

    py::enum_<MeasureKind>(m, "MeasureKind")
        .value("CONCURRENCE_SQ", MeasureKind::ConcurrenceSq)
        .value("NEGATIVITY_SQ", MeasureKind::NegativitySq)
        .value("DISCORD", MeasureKind::Discord)
        .value("WORK_DEFICIT", MeasureKind::WorkDeficit)
        .value("EOF", MeasureKind::EoF);

    py::class_<OptimizerConfig>(m, "OptimizerConfig")
        .def(py::init<>())
        .def_readwrite("grid_theta", &OptimizerConfig::grid_theta)
        .def_readwrite("grid_phi", &OptimizerConfig::grid_phi)
        .def_readwrite("refine_tolerance", &OptimizerConfig::refine_tolerance)
        .def_readwrite("max_refine_iters", &OptimizerConfig::max_refine_iters);

    py::class_<Bipartition>(m, "Bipartition")
        .def_readonly("part_a", &Bipartition::part_a)
        .def_readonly("part_b", &Bipartition::part_b);

    py::class_<GgmReport>(m, "GgmReport")
        .def_readonly("ggm", &GgmReport::ggm)
        .def_readonly("a", &GgmReport::a)
        .def_readonly("b", &GgmReport::b)
        .def_readonly("beta", &GgmReport::beta)
        .def_readonly("max_cut", &GgmReport::max_cut)
        .def_readonly("single_qubit_dominates",
                      &GgmReport::single_qubit_dominates);

    py::class_<NodeScore>(m, "NodeScore")
        .def_readonly("node", &NodeScore::node)
        .def_readonly("cut_value", &NodeScore::cut_value)
        .def_readonly("partners", &NodeScore::partners)
        .def_readonly("pair_values", &NodeScore::pair_values)
        .def_readonly("delta", &NodeScore::delta);

    py::class_<MonogamyReport>(m, "MonogamyReport")
        .def_readonly("kind", &MonogamyReport::kind)
        .def_readonly("per_node", &MonogamyReport::per_node)
        .def_readonly("min_node", &MonogamyReport::min_node)
        .def_readonly("delta", &MonogamyReport::delta);

    py::enum_<ProofRoute>(m, "ProofRoute")
        .value("THEOREM1", ProofRoute::Theorem1)
        .value("PROPOSITION1", ProofRoute::Proposition1)
        .value("UNPROVEN", ProofRoute::Unproven);

    py::class_<BoundVerdict>(m, "BoundVerdict")
        .def_readonly("kind", &BoundVerdict::kind)
        .def_readonly("ggm_report", &BoundVerdict::ggm_report)
        .def_readonly("monogamy", &BoundVerdict::monogamy)
        .def_readonly("delta", &BoundVerdict::delta)
        .def_readonly("f_of_g", &BoundVerdict::f_of_g)
        .def_readonly("r_term", &BoundVerdict::r_term)
        .def_readonly("h_term", &BoundVerdict::h_term)
        .def_readonly("cond_beta", &BoundVerdict::cond_beta)
        .def_readonly("cond_r_negative", &BoundVerdict::cond_r_negative)
        .def_readonly("cond_h_negative", &BoundVerdict::cond_h_negative)
        .def_readonly("bound_satisfied", &BoundVerdict::bound_satisfied)
        .def_readonly("proof_route", &BoundVerdict::proof_route);

    m.def(
        "partial_trace",
        [](const PureState &state, const std::vector<int> &keep) {
            return partial_trace(state, keep);
        },
        py::arg("state"), py::arg("keep"));
    m.def(
        "partial_trace_op",
        [](const DensityOperator &op, const std::vector<int> &keep) {
            return partial_trace(op, keep);
        },
        py::arg("op"), py::arg("keep"));
    m.def(
        "partial_transpose",
        [](const DensityOperator &op, const std::vector<int> &on) {
            return matrix_to_numpy(partial_transpose(op, on));
        },
        py::arg("op"), py::arg("on"));
    m.def(
        "spectrum",
        [](const DensityOperator &op) {
            return hermitian_spectrum(op).eigenvalues;
        },
        py::arg("op"));
    m.def(
        "von_neumann_entropy",
        [](const DensityOperator &op) {
            return von_neumann_entropy(hermitian_spectrum(op));
        },
        py::arg("op"));
    m.def("binary_entropy", &binary_entropy, py::arg("x"));

    m.def("concurrence", &concurrence, py::arg("rho"));
    m.def("negativity", &negativity, py::arg("rho"));
    m.def("eof", &eof, py::arg("rho"));
    m.def(
        "discord",
        [](const DensityOperator &rho, const std::string &side,
           const OptimizerConfig &cfg) {
            return discord(rho, side_from_string(side), cfg);
        },
        py::arg("rho"), py::arg("measured_side") = "A",
        py::arg("config") = OptimizerConfig{});
    m.def(
        "work_deficit",
        [](const DensityOperator &rho, const std::string &side,
           const OptimizerConfig &cfg) {
            return work_deficit(rho, side_from_string(side), cfg);
        },
        py::arg("rho"), py::arg("measured_side") = "A",
        py::arg("config") = OptimizerConfig{});
    m.def("pure_cut_measure", &pure_cut_measure, py::arg("state"),
          py::arg("node"), py::arg("kind"));

    m.def(
        "monogamy_score",
        [](const PureState &state, MeasureKind kind,
           const OptimizerConfig &cfg) {
            return monogamy_score(state, kind, cfg);
        },
        py::arg("state"), py::arg("kind"),
        py::arg("config") = OptimizerConfig{});
    m.def("ggm", [](const PureState &state) { return ggm(state); },
          py::arg("state"));
    m.def("ggm_dicke_closed_form",
          [](int n, int r) {
              const auto v = ggm_dicke_closed_form(n, r);
              return py::make_tuple(v.a, v.b);
          },
          py::arg("n"), py::arg("r"));
    m.def("ggm_ghzw_closed_form", &ggm_ghzw_closed_form, py::arg("alpha"),
          py::arg("gamma"), py::arg("n"));
    m.def("f_q", &f_q, py::arg("kind"), py::arg("g"));
    m.def("r_q", &r_q, py::arg("kind"), py::arg("b"), py::arg("beta"));
    m.def(
        "verdict",
        [](const PureState &state, MeasureKind kind,
           const OptimizerConfig &cfg) {
            return verdict(state, kind, cfg);
        },
        py::arg("state"), py::arg("kind"),
        py::arg("config") = OptimizerConfig{});

    m.def("dicke", &dicke, py::arg("n"), py::arg("r"));
    m.def("ghz_w", &ghz_w, py::arg("n"), py::arg("alpha"), py::arg("gamma"));
    m.def("mg_ground", &mg_ground, py::arg("n"));
    m.def("ising_gas_ground", &ising_gas_ground, py::arg("n"), py::arg("x"));
    m.def("ising_ring_ground", &ising_ring_ground, py::arg("n"));
    m.def("slocc_class", &slocc_class, py::arg("cls"), py::arg("params"),
          py::arg("normalize") = true);
    m.def(
        "haar_random",
        [](int n, std::uint64_t seed, std::uint64_t stream) {
            Rng rng(RngStream{seed, stream});
            return haar_random(n, rng);
        },
        py::arg("n"), py::arg("seed") = 0, py::arg("stream") = 0);
    m.def(
        "symmetric_random",
        [](int n, std::uint64_t seed, std::uint64_t stream) {
            Rng rng(RngStream{seed, stream});
            return symmetric_random(n, rng);
        },
        py::arg("n"), py::arg("seed") = 0, py::arg("stream") = 0);
    m.def(
        "slocc_random",
        [](int cls, std::uint64_t seed, std::uint64_t stream) {
            Rng rng(RngStream{seed, stream});
            return slocc_random(cls, rng);
        },
        py::arg("cls"), py::arg("seed") = 0, py::arg("stream") = 0);

    m.def("read_state_file", &read_state_file, py::arg("path"));
    m.def("write_state_file", &write_state_file, py::arg("path"),
          py::arg("state"));
}
