"""
How the localization and detection scores behave
================================================

Small hand-built cases for pixel F1 (with its inverse rule), AUC and
balanced accuracy, plus what the degradations do to a test pattern.
"""

# %%
import numpy as np

from mmfusion import evaluation as E

gt = np.zeros((6, 6), np.uint8)
gt[1:4, 1:4] = 1

# %% a perfect map and its exact complement both score 1
print("perfect   :", E.pixel_f1(gt.astype(float), gt))
print("complement:", E.pixel_f1(1.0 - gt, gt))

# %% over-segmentation: every true pixel found, plus a band of false alarms
pred = np.zeros((6, 6))
pred[1:5, 1:5] = 0.9
print("too large :", round(E.pixel_f1(pred, gt), 4), "confusion", E.confusion(E.binarize(pred), gt))

# %% the threshold is strict: 0.5 counts as authentic, and the inverse rule then scores "all manipulated"
print("all 0.5   :", E.pixel_f1(np.full((6, 6), 0.5), gt))

# %% detection: ranking quality (AUC) versus decisions at 0.5 (bAcc)
scores = np.array([0.2, 0.4, 0.45, 0.6, 0.55, 0.9])
labels = np.array([0, 0, 1, 0, 1, 1])
print("AUC       :", E.auc(scores, labels))
print("bAcc      :", E.balanced_accuracy(scores, labels))

# %% degradations on a checkerboard
board = ((np.indices((32, 32)) // 4).sum(0) % 2 * 255).astype(np.uint8)
board = np.repeat(board[..., None], 3, -1)
for k in (3, 7, 13):
    out = E.degrade(board, "gaussian_blur", k)
    print(f"blur k={k:>2} sigma={E.blur_sigma(k):.2f}: mean abs change {np.abs(out.astype(int) - board).mean():.1f}")
for q in (100, 70, 50):
    out = E.degrade(board, "jpeg", q)
    print(f"jpeg q={q:>3}: mean abs change {np.abs(out.astype(int) - board).mean():.1f}")
