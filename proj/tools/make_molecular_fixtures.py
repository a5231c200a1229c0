# Copyright 2026 The tgopt Authors

# Licensed under the Apache License, Version 2.0 (the License);
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

# http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an AS IS BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates fixtures/hamiltonians/{lih_12q,beh2_14q}.txt and their metadata.

Needs pennylane (Hartree-Fock integrals + Jordan-Wigner) and scipy (sparse
ground-state solve). Wire 0 is written as the leftmost Pauli letter.
"""

import argparse
import json
import pathlib

import numpy as np
import pennylane as qml
import scipy.sparse.linalg

MOLECULES = {
    "lih_12q": {
        "symbols": ["Li", "H"],
        "coordinates": [[0.0, 0.0, 0.0], [0.0, 0.0, 1.57]],
        "bond_length_angstrom": 1.57,
    },
    "beh2_14q": {
        "symbols": ["H", "Be", "H"],
        "coordinates": [[0.0, 0.0, -1.33], [0.0, 0.0, 0.0], [0.0, 0.0, 1.33]],
        "bond_length_angstrom": 1.33,
    },
}


def pauli_terms(hamiltonian, n):
    terms = {}
    for word, coeff in hamiltonian.pauli_rep.items():
        letters = ["I"] * n
        for wire, op in word.items():
            letters[wire] = op
        key = "".join(letters)
        c = complex(coeff)
        assert abs(c.imag) < 1e-12, (key, c)
        terms[key] = terms.get(key, 0.0) + c.real
    return terms


def build(name, spec, outdir):
    coords = np.array(spec["coordinates"])
    mol = qml.qchem.Molecule(spec["symbols"], coords, unit="angstrom", basis_name="sto-3g")
    h, n = qml.qchem.molecular_hamiltonian(mol, method="dhf", mapping="jordan_wigner")
    terms = pauli_terms(h, n)
    terms = {k: v for k, v in terms.items() if abs(v) >= 1e-12}

    lines = [f"# {name}: STO-3G, Jordan-Wigner, {len(terms)} terms", f"qubits {n}"]
    for word in sorted(terms):
        lines.append(f"{terms[word]:.17g} {word}")
    (outdir / f"{name}.txt").write_text("\n".join(lines) + "\n")

    sparse = qml.Hamiltonian([terms[w] for w in sorted(terms)],
                             [qml.pauli.string_to_pauli_word(w) for w in sorted(terms)]
                             ).sparse_matrix(wire_order=range(n))
    e0 = scipy.sparse.linalg.eigsh(sparse.real, k=1, which="SA", tol=1e-12)[0][0]
    meta = {
        "molecule": "".join(spec["symbols"]),
        "symbols": spec["symbols"],
        "coordinates_angstrom": spec["coordinates"],
        "bond_length_angstrom": spec["bond_length_angstrom"],
        "basis": "sto-3g",
        "mapping": "jordan_wigner",
        "qubits": n,
        "terms": len(terms),
        "ground_energy": float(e0),
        "ground_energy_method": "scipy.sparse.linalg.eigsh on the listed terms",
        "generator": f"pennylane {qml.__version__} qchem (differentiable Hartree-Fock)",
    }
    (outdir / f"{name}.meta.json").write_text(json.dumps(meta, indent=2) + "\n")
    print(name, n, len(terms), e0)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parents[1]
                                             / "fixtures" / "hamiltonians"))
    args = parser.parse_args()
    outdir = pathlib.Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for name, spec in MOLECULES.items():
        build(name, spec, outdir)


if __name__ == "__main__":
    main()
