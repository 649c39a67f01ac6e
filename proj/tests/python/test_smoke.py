# Copyright 2026 The SEQC Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest

import seqc


@pytest.fixture(scope="module")
def backend():
    return seqc.generate_backend(2)


def test_backend_shape(backend):
    assert backend.num_qubits == 20
    assert backend.num_chiplets == 2
    round_trip = seqc.Backend.from_json(backend.to_json())
    assert round_trip.num_qubits == 20


def test_benchmark_generators():
    c = seqc.ghz(12)
    assert c.num_qubits == 12
    assert c.depth() == 12
    assert c.gate_count() == 12
    assert seqc.bit_code(9).num_qubits == 9
    assert seqc.phase_code(9).gate_count() > seqc.bit_code(9).gate_count()
    assert seqc.vqe(6, seed=3).to_json() == seqc.vqe(6, seed=3).to_json()
    assert seqc.tfim_sim(6).num_qubits == 6


def test_both_pipelines_verify(backend):
    circuit = seqc.ghz(20)

    base = seqc.baseline_compile(circuit, backend, seed=7)
    assert seqc.validate_compiled(base, backend) == []
    ok, why = seqc.permutation_equiv(circuit, base)
    assert ok, why

    strat, compiled, strat_s, elab_s = seqc.seqc_compile(circuit, backend, seed=7, workers=2)
    assert strat.num_subcircuits == 2
    assert seqc.validate_compiled(compiled, backend) == []
    ok, why = seqc.permutation_equiv(circuit, compiled)
    assert ok, why
    assert strat_s >= 0.0 and elab_s >= 0.0

    base_metrics = seqc.compute_metrics(base, backend)
    seqc_metrics = seqc.compute_metrics(compiled, backend)
    assert 0.0 < seqc_metrics["esp"] <= 1.0
    assert seqc_metrics["inter_chiplet_gates"] <= base_metrics["inter_chiplet_gates"]


def test_split_stages_match_combined(backend):
    circuit = seqc.tfim_sim(20)
    strat = seqc.stratify(circuit, backend, seed=5, workers=2)
    compiled = seqc.elaborate(strat, backend, workers=2, seed=5)
    assert seqc.validate_compiled(compiled, backend) == []
    ok, why = seqc.permutation_equiv(circuit, compiled)
    assert ok, why
    again = seqc.elaborate(strat, backend, workers=1, seed=5)
    assert again.to_json() == compiled.to_json()


def test_statevector_fidelity(backend):
    circuit = seqc.ghz(10)
    _, compiled, _, _ = seqc.seqc_compile(circuit, backend, seed=3, workers=2)
    assert seqc.statevector_equiv(circuit, compiled) >= 1.0 - 1e-9


def test_geomean_ratio():
    assert seqc.geomean_ratio([(2.0, 1.0), (8.0, 1.0)]) == pytest.approx(4.0)
    with pytest.raises(Exception):
        seqc.geomean_ratio([(1.0, 0.0)])
