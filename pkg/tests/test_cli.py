"""End-to-end command-line behavior, driven through main() and one real process."""

import json
import subprocess
import sys

import numpy as np
import pytest
from PIL import Image

from strokeaug import idxio
from strokeaug.cli import main
from strokeaug.pipeline import PipelineConfig, augmented_mask
from strokeaug.augment import AugmentConfig

from imagegen import random_image_stack


@pytest.fixture
def dataset_files(tmp_path):
    images = random_image_stack(0, 64, 8, 8)
    labels = (np.arange(64) % 10).astype(np.uint8)
    img_path = tmp_path / "imgs.idx"
    lbl_path = tmp_path / "lbls.idx"
    img_path.write_bytes(idxio.write_images_array(images))
    lbl_path.write_bytes(idxio.write_labels(labels))
    return img_path, lbl_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAugment:
    def test_apply_prob_zero_rewrites_input_bytes(self, dataset_files, tmp_path, capsys):
        img_path, _ = dataset_files
        out = tmp_path / "out.idx"
        code, _, _ = run(
            capsys, "augment", "--images", img_path, "--out", out,
            "--method", "lineerase", "--mode", "x", "--apply-prob", "0",
        )
        assert code == 0
        assert out.read_bytes() == img_path.read_bytes()

    def test_same_flags_same_bytes(self, dataset_files, tmp_path, capsys):
        img_path, _ = dataset_files
        a, b = tmp_path / "a.idx", tmp_path / "b.idx"
        argv = ["augment", "--images", img_path, "--method", "thick",
                "--mode", "complete", "--seed", "9"]
        assert run(capsys, *argv, "--out", a)[0] == 0
        assert run(capsys, *argv, "--out", b)[0] == 0
        assert a.read_bytes() == b.read_bytes()

    def test_workers_do_not_change_bytes(self, dataset_files, tmp_path, capsys):
        img_path, _ = dataset_files
        serial, parallel = tmp_path / "s.idx", tmp_path / "p.idx"
        argv = ["augment", "--images", img_path, "--method", "thin",
                "--mode", "random", "--row-prob", "0.2", "--seed", "5"]
        assert run(capsys, *argv, "--out", serial)[0] == 0
        assert run(capsys, *argv, "--out", parallel, "--workers", "4")[0] == 0
        assert serial.read_bytes() == parallel.read_bytes()

    def test_labels_pass_through(self, dataset_files, tmp_path, capsys):
        img_path, lbl_path = dataset_files
        out, out_labels = tmp_path / "out.idx", tmp_path / "outl.idx"
        code, _, _ = run(
            capsys, "augment", "--images", img_path, "--labels", lbl_path,
            "--out", out, "--out-labels", out_labels,
            "--method", "elongate", "--mode", "y", "--apply-prob", "1",
        )
        assert code == 0
        assert out_labels.read_bytes() == lbl_path.read_bytes()

    def test_out_labels_without_labels_rejected(self, dataset_files, tmp_path, capsys):
        img_path, _ = dataset_files
        code, _, err = run(
            capsys, "augment", "--images", img_path, "--out", tmp_path / "o.idx",
            "--out-labels", tmp_path / "ol.idx", "--method", "thick", "--mode", "complete",
        )
        assert code == 2
        assert "--labels" in err

    def test_label_count_mismatch_rejected(self, dataset_files, tmp_path, capsys):
        img_path, _ = dataset_files
        short = tmp_path / "short.idx"
        short.write_bytes(idxio.write_labels(np.zeros(3, dtype=np.uint8)))
        code, _, err = run(
            capsys, "augment", "--images", img_path, "--labels", short,
            "--out", tmp_path / "o.idx", "--method", "thick", "--mode", "complete",
        )
        assert code == 2
        assert "3 labels" in err

    def test_json_summary(self, dataset_files, tmp_path, capsys):
        img_path, _ = dataset_files
        code, out_text, _ = run(
            capsys, "augment", "--images", img_path, "--out", tmp_path / "o.idx",
            "--method", "thick", "--mode", "random", "--seed", "3", "--json",
        )
        assert code == 0
        summary = json.loads(out_text)
        cfg = PipelineConfig(AugmentConfig("thick", "random"), apply_prob=0.5, base_seed=3)
        assert summary == {
            "command": "augment",
            "images": 64,
            "modified": int(augmented_mask(64, cfg).sum()),
            "seed": 3,
            "method": "thick",
            "mode": "random",
            "out": str(tmp_path / "o.idx"),
        }

    def test_missing_input_file_is_io_error(self, tmp_path, capsys):
        code, _, err = run(
            capsys, "augment", "--images", tmp_path / "absent.idx",
            "--out", tmp_path / "o.idx", "--method", "thick", "--mode", "complete",
        )
        assert code == 1
        assert "absent.idx" in err

    def test_corrupt_input_names_file_and_offset(self, tmp_path, capsys):
        bad = tmp_path / "bad.idx"
        bad.write_bytes(b"\x00\x00\x08\x03" + b"\x00" * 5)
        code, _, err = run(
            capsys, "augment", "--images", bad, "--out", tmp_path / "o.idx",
            "--method", "thick", "--mode", "complete",
        )
        assert code == 2
        assert "bad.idx" in err and "byte offset" in err

    def test_incompatible_method_mode_rejected(self, dataset_files, tmp_path, capsys):
        img_path, _ = dataset_files
        code, _, err = run(
            capsys, "augment", "--images", img_path, "--out", tmp_path / "o.idx",
            "--method", "thick", "--mode", "x",
        )
        assert code == 2
        assert "mode" in err


class TestGrid:
    def test_renders_png_and_manifest(self, dataset_files, tmp_path, capsys):
        img_path, _ = dataset_files
        out = tmp_path / "sheet.png"
        code, out_text, _ = run(
            capsys, "grid", "--images", img_path, "--out", out,
            "--count", "6", "--cols", "3", "--scale", "2", "--tag", "original",
        )
        assert code == 0
        assert Image.open(out).mode == "L"
        manifest = json.loads((tmp_path / "sheet.json").read_text())
        assert [m["cell"] for m in manifest] == [1, 2, 3, 4, 5, 6]
        assert all(m["tag"] == "original" for m in manifest)
        assert "cells=6" in out_text and "grid=2x3" in out_text

    def test_explicit_manifest_path(self, dataset_files, tmp_path, capsys):
        img_path, _ = dataset_files
        man = tmp_path / "custom_manifest.json"
        code, _, _ = run(
            capsys, "grid", "--images", img_path, "--out", tmp_path / "g.png",
            "--count", "2", "--manifest", man,
        )
        assert code == 0
        assert len(json.loads(man.read_text())) == 2

    def test_indices_selection(self, dataset_files, tmp_path, capsys):
        img_path, _ = dataset_files
        code, _, _ = run(
            capsys, "grid", "--images", img_path, "--out", tmp_path / "g.png",
            "--indices", "5,0,63",
        )
        assert code == 0
        manifest = json.loads((tmp_path / "g.json").read_text())
        assert [m["source_index"] for m in manifest] == [5, 0, 63]

    def test_count_zero_renders_black_canvas(self, dataset_files, tmp_path, capsys):
        img_path, _ = dataset_files
        out = tmp_path / "empty.png"
        code, _, _ = run(
            capsys, "grid", "--images", img_path, "--out", out, "--count", "0",
        )
        assert code == 0
        canvas = np.asarray(Image.open(out))
        assert not canvas.any()
        assert json.loads((tmp_path / "empty.json").read_text()) == []

    def test_count_beyond_available_rejected(self, dataset_files, tmp_path, capsys):
        img_path, _ = dataset_files
        code, _, err = run(
            capsys, "grid", "--images", img_path, "--out", tmp_path / "g.png",
            "--count", "65",
        )
        assert code == 2
        assert "65" in err and "64" in err

    def test_out_of_range_index_rejected(self, dataset_files, tmp_path, capsys):
        img_path, _ = dataset_files
        code, _, err = run(
            capsys, "grid", "--images", img_path, "--out", tmp_path / "g.png",
            "--indices", "0,64",
        )
        assert code == 2
        assert "valid: 0..63" in err

    def test_malformed_indices_rejected(self, dataset_files, tmp_path, capsys):
        img_path, _ = dataset_files
        code, _, err = run(
            capsys, "grid", "--images", img_path, "--out", tmp_path / "g.png",
            "--indices", "1,two,3",
        )
        assert code == 2
        assert "--indices" in err


class TestStats:
    def test_plain_summary(self, tmp_path, capsys):
        images = np.zeros((3, 2, 2), dtype=np.uint8)
        images[0] = [[5, 255], [0, 0]]
        path = tmp_path / "i.idx"
        path.write_bytes(idxio.write_images_array(images))
        code, out_text, _ = run(capsys, "stats", "--images", path)
        assert code == 0
        assert "count=3" in out_text and "dims=2x2" in out_text

    def test_json_summary_values(self, tmp_path, capsys):
        images = np.zeros((2, 1, 2), dtype=np.uint8)
        images[1] = [[5, 255]]
        path = tmp_path / "i.idx"
        path.write_bytes(idxio.write_images_array(images))
        code, out_text, _ = run(capsys, "stats", "--images", path, "--json")
        summary = json.loads(out_text)
        assert code == 0
        assert summary["count"] == 2
        assert summary["mean_ink_sum"] == 130.0
        assert summary["mean_nonzero"] == 1.0

    def test_per_image_lines(self, tmp_path, capsys):
        images = np.zeros((2, 1, 2), dtype=np.uint8)
        images[1] = [[5, 255]]
        path = tmp_path / "i.idx"
        path.write_bytes(idxio.write_images_array(images))
        code, out_text, _ = run(capsys, "stats", "--images", path, "--json", "--per-image")
        lines = out_text.strip().splitlines()
        assert code == 0 and len(lines) == 3
        assert json.loads(lines[1]) == {"index": 0, "nonzero": 0, "ink_sum": 0}
        assert json.loads(lines[2]) == {"index": 1, "nonzero": 2, "ink_sum": 260}

    def test_thickened_dataset_has_more_ink(self, dataset_files, tmp_path, capsys):
        img_path, _ = dataset_files
        out = tmp_path / "thick.idx"
        run(capsys, "augment", "--images", img_path, "--out", out,
            "--method", "thick", "--mode", "complete", "--apply-prob", "1")

        def mean_nonzero(path):
            code, text, _ = run(capsys, "stats", "--images", path, "--json")
            assert code == 0
            return json.loads(text)["mean_nonzero"]

        assert mean_nonzero(out) > mean_nonzero(img_path)


class TestInfo:
    def test_image_header(self, dataset_files, capsys):
        img_path, _ = dataset_files
        code, out_text, _ = run(capsys, "info", img_path)
        assert code == 0
        assert "rank=3" in out_text and "extents=64x8x8" in out_text

    def test_label_header(self, dataset_files, capsys):
        _, lbl_path = dataset_files
        code, out_text, _ = run(capsys, "info", lbl_path)
        assert code == 0
        assert "rank=1" in out_text and "extents=64" in out_text

    def test_gzip_file_mentions_gzip(self, tmp_path, capsys):
        path = tmp_path / "x.idx"
        path.write_bytes(b"\x1f\x8b\x08\x00rest")
        code, _, err = run(capsys, "info", path)
        assert code == 2
        assert "gzip" in err

    def test_bad_magic_reports_offset(self, tmp_path, capsys):
        path = tmp_path / "x.idx"
        path.write_bytes(b"\x12\x34\x56\x78" + b"\x00" * 12)
        code, _, err = run(capsys, "info", path)
        assert code == 2
        assert "byte offset 0" in err

    def test_missing_file(self, tmp_path, capsys):
        code, _, err = run(capsys, "info", tmp_path / "nope.idx")
        assert code == 1
        assert "nope.idx" in err


def test_console_entry_point(dataset_files, tmp_path):
    img_path, _ = dataset_files
    out = tmp_path / "o.idx"
    proc = subprocess.run(
        [sys.executable, "-m", "strokeaug.cli", "augment", "--images", str(img_path),
         "--out", str(out), "--method", "thick", "--mode", "complete", "--json"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["images"] == 64
    assert out.exists()
