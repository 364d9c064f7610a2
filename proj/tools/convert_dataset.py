#!/usr/bin/env python3
# Copyright 2026 The csgraph Authors
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

"""Converts public graph datasets into csgraph dataset directories.

Output layout (what `csgraph prep` expects):

  edges.txt      "u v" per line
  labels.csv     "node,label", -1 for unknown
  features.csv   dense matrix with a header row (optional)
  split.txt      [train]/[valid]/[test] sections (fixed-split datasets only)

Sources are read from local files; nothing is downloaded.

  planetoid  ind.<name>.{x,tx,allx,y,ty,ally,graph,test.index}
  ogb        an unpacked ogbn-arxiv / ogbn-products directory (raw/ + split/)
  snap-email email-Eu-core.txt + email-Eu-core-department-labels.txt
  generic    any edge list, label file and optional feature CSV
"""

import argparse
import gzip
import os
import pickle
import sys

import numpy as np


def open_text(path):
    return gzip.open(path, "rt") if path.endswith(".gz") else open(path)


def write_dataset(out, edges, labels, features=None, split=None):
    os.makedirs(out, exist_ok=True)
    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    np.savetxt(os.path.join(out, "edges.txt"), edges, fmt="%d")
    with open(os.path.join(out, "labels.csv"), "w") as f:
        f.write("node,label\n")
        for i, y in enumerate(labels):
            f.write(f"{i},{int(y)}\n")
    if features is not None:
        features = np.asarray(features, dtype=np.float64)
        header = ",".join(f"f{j}" for j in range(features.shape[1]))
        np.savetxt(os.path.join(out, "features.csv"), features, delimiter=",",
                   header=header, comments="", fmt="%.10g")
    if split is not None:
        with open(os.path.join(out, "split.txt"), "w") as f:
            for name in ("train", "valid", "test"):
                f.write(f"[{name}]\n")
                f.write(" ".join(str(int(i)) for i in sorted(split[name])) + "\n")
    n = len(labels)
    print(f"{out}: n={n} edges={len(edges)} "
          f"features={'none' if features is None else features.shape[1]}",
          file=sys.stderr)


def planetoid(args):
    import scipy.sparse as sp

    def load(part):
        with open(os.path.join(args.root, f"ind.{args.name}.{part}"), "rb") as f:
            return pickle.load(f, encoding="latin1")

    x, y, tx, ty, allx, ally, graph = (load(p) for p in
                                        ("x", "y", "tx", "ty", "allx", "ally", "graph"))
    test_index = np.loadtxt(os.path.join(args.root, f"ind.{args.name}.test.index"),
                            dtype=np.int64)
    ordered = np.sort(test_index)
    if args.name == "citeseer":
        # Some test ids are isolated and absent from tx/ty; pad with empty rows.
        full = range(ordered.min(), ordered.max() + 1)
        tx_ext = sp.lil_matrix((len(full), tx.shape[1]))
        tx_ext[ordered - ordered.min(), :] = tx
        ty_ext = np.zeros((len(full), ty.shape[1]))
        ty_ext[ordered - ordered.min(), :] = ty
        tx, ty = tx_ext, ty_ext
    feats = sp.vstack((allx, tx)).tolil()
    feats[test_index, :] = feats[ordered, :]
    onehot = np.vstack((ally, ty))
    onehot[test_index, :] = onehot[ordered, :]
    labels = np.where(onehot.sum(1) > 0, onehot.argmax(1), -1)
    n = len(labels)
    edges = [(u, v) for u, nbrs in graph.items() for v in nbrs if u < n and v < n]
    write_dataset(args.out, edges, labels, feats.toarray())


def ogb(args):
    raw = os.path.join(args.root, "raw")

    def csv(name, dtype):
        for ext in (".csv.gz", ".csv"):
            path = os.path.join(raw, name + ext)
            if os.path.exists(path):
                return np.loadtxt(open_text(path), delimiter=",", dtype=dtype, ndmin=2)
        raise FileNotFoundError(os.path.join(raw, name + ".csv[.gz]"))

    edges = csv("edge", np.int64)
    labels = csv("node-label", np.int64)[:, 0]
    features = csv("node-feat", np.float64)
    split_dir = os.path.join(args.root, "split", args.split_name)
    split = {}
    for name, file in (("train", "train"), ("valid", "valid"), ("test", "test")):
        for ext in (".csv.gz", ".csv"):
            path = os.path.join(split_dir, file + ext)
            if os.path.exists(path):
                split[name] = np.loadtxt(open_text(path), dtype=np.int64, ndmin=1)
    write_dataset(args.out, edges, labels, features, split)


def snap_email(args):
    edges = np.loadtxt(args.edges, dtype=np.int64)
    dept = np.loadtxt(args.labels, dtype=np.int64)
    labels = np.full(dept[:, 0].max() + 1, -1)
    labels[dept[:, 0]] = dept[:, 1]
    write_dataset(args.out, edges, labels)


def generic(args):
    edges = np.loadtxt(args.edges, dtype=np.int64, comments="#", delimiter=args.delimiter)
    pairs = np.loadtxt(args.labels, dtype=np.int64, comments="#", delimiter=",",
                       skiprows=args.label_header)
    pairs = pairs.reshape(-1, 2)
    labels = np.full(max(pairs[:, 0].max(), edges.max()) + 1, -1)
    labels[pairs[:, 0]] = pairs[:, 1]
    if args.relabel:
        known = labels >= 0
        _, labels[known] = np.unique(labels[known], return_inverse=True)
    features = None
    if args.features:
        features = np.loadtxt(args.features, delimiter=",", skiprows=args.feature_header,
                              ndmin=2)
    write_dataset(args.out, edges[:, :2], labels, features)


def main():
    p = argparse.ArgumentParser(description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="source", required=True)

    s = sub.add_parser("planetoid")
    s.add_argument("--root", required=True, help="directory holding ind.<name>.* files")
    s.add_argument("--name", required=True, choices=["cora", "citeseer", "pubmed"])
    s.add_argument("--out", required=True)
    s.set_defaults(fn=planetoid)

    s = sub.add_parser("ogb")
    s.add_argument("--root", required=True, help="unpacked dataset directory")
    s.add_argument("--split-name", default="time",
                   help="subdirectory of split/ (time for arxiv, sales_ranking for products)")
    s.add_argument("--out", required=True)
    s.set_defaults(fn=ogb)

    s = sub.add_parser("snap-email")
    s.add_argument("--edges", required=True)
    s.add_argument("--labels", required=True)
    s.add_argument("--out", required=True)
    s.set_defaults(fn=snap_email)

    s = sub.add_parser("generic")
    s.add_argument("--edges", required=True)
    s.add_argument("--delimiter", default=None, help="edge file delimiter (default whitespace)")
    s.add_argument("--labels", required=True, help="CSV of node,label")
    s.add_argument("--label-header", type=int, default=0, help="header lines to skip")
    s.add_argument("--features", help="CSV with one row per node, in node order")
    s.add_argument("--feature-header", type=int, default=0)
    s.add_argument("--relabel", action="store_true", help="map classes to 0..c-1")
    s.add_argument("--out", required=True)
    s.set_defaults(fn=generic)

    args = p.parse_args()
    args.fn(args)


if __name__ == "__main__":
    main()
