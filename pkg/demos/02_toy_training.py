"""
Two-phase training on a toy splice corpus
=========================================

The full recipe at toy scale, on CPU:

1. generate 200 64x64 images, half of them with a pasted noisy box
2. pre-train a single-branch RGB+Bayar model so the Bayar taps learn something
3. phase 1: train the early-fusion encoder and anomaly decoder
4. phase 2: freeze them and train the confidence decoder and detector
5. score the training set

Expect a few CPU minutes. Checkpoints land in ``demo_output/toy`` and are
reused by the robustness and masking demo.
"""

# %%
import time
from dataclasses import replace
from pathlib import Path

from mmfusion import data as D
from mmfusion import evaluation as E
from mmfusion import training as T
from mmfusion.config import profile
from mmfusion.model import MMFusion

OUT = Path(__file__).with_name("demo_output") / "toy"
cfg = profile("toy")
print("config digest:", cfg.digest())

# %% corpus
manifest = D.load_manifest(D.make_synthetic(OUT / "data", n=200, size=64, seed=0))
print("authentic / manipulated:", manifest.counts)

# %% Bayar pre-training: the same trainer, on a single RGB+Bayar branch
t0 = time.time()
single = replace(cfg, model=replace(cfg.model, encoder=replace(cfg.model.encoder, fusion="single", aux_modality="bayar")))
pre = T.train_phase1(single, manifest, out=OUT / "bayar.pt")
print(f"pre-training: loss {pre.history[0]['loss']:.3f} -> {pre.history[-1]['loss']:.3f}")

# %% phase 1 with the pre-trained taps frozen inside the fusion model
model = T.transfer_bayar(pre.model, MMFusion(cfg.model))
p1 = T.train_phase1(cfg, manifest, out=OUT / "p1.pt", model=model)
print(f"phase 1: loss {p1.history[0]['loss']:.3f} -> {p1.history[-1]['loss']:.3f}")

# %% phase 2 starts from the phase-1 checkpoint on disk
p2 = T.train_phase2(cfg, manifest, OUT / "p1.pt", out=OUT / "p2.pt")
print(f"phase 2: loss {p2.history[0]['loss']:.3f} -> {p2.history[-1]['loss']:.3f}")
print(f"training took {time.time() - t0:.0f}s")

# %% how well did it fit?
report = E.evaluate(p2.model, manifest)
avg = report.average
print(f"pixel F1 {avg['pixel_f1']:.3f}   AUC {avg['auc']:.3f}   bAcc {avg['bacc']:.3f}")
E.emit_report(report, OUT / "eval", "eval")
