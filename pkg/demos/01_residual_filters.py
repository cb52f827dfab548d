"""
Looking at the three residual views of a spliced image
======================================================

A synthetic splice is pushed through the SRM bank, a Bayar layer and the
noiseprint stand-in. The pasted box carries a different noise level from
its host, which the residuals expose while the RGB view barely shows it.
Images are written next to this script under ``demo_output/filters``.
"""

# %%
from pathlib import Path

import numpy as np
import torch
from PIL import Image

from mmfusion import data as D
from mmfusion import filters as flt

OUT = Path(__file__).with_name("demo_output") / "filters"
OUT.mkdir(parents=True, exist_ok=True)

rng = np.random.default_rng(4)
img, mask = D.synth_noise_splice(rng, 128)
while mask is None:  # half the generated images are authentic
    img, mask = D.synth_noise_splice(rng, 128)
x = D.to_tensor(img)[None]

# %% SRM: three fixed high-pass kernels on 8-bit grey levels, truncated at 2
srm = flt.SRMFilter()
r_srm = srm(x)
print("SRM kernels:", flt.load_srm_kernels()[2])

# %% Bayar: learnable, but projected so the centre tap is -1 and the rest sum to 1
bayar = flt.BayarConv()
print("Bayar constraint error after init:", bayar.constraint_error())
r_bayar = bayar(x)

# %% noiseprint: without released weights a Laplacian proxy takes its place
proxy = flt.make_noiseprint_provider("proxy")
r_np = flt.noiseprint_extract(x, proxy)
print("noiseprint source:", proxy.label)

# %% how much louder is each residual inside the splice than outside?
inside = torch.from_numpy(mask.astype(bool))
for name, r in (("srm", r_srm), ("bayar", r_bayar), ("noiseprint", r_np)):
    energy = r[0].abs().mean(dim=0)
    ratio = energy[inside].mean() / energy[~inside].mean()
    print(f"{name:>10}: mean |residual| inside / outside = {ratio:.2f}")


# %% save a strip: RGB, mask, and one channel of each residual
def to_u8(a):
    a = a - a.min()
    return np.uint8(255 * a / max(a.max(), 1e-12))


tiles = [img, np.repeat(mask[..., None] * 255, 3, -1)]
tiles += [np.repeat(to_u8(r[0, 0].detach().numpy())[..., None], 3, -1) for r in (r_srm, r_bayar, r_np)]
Image.fromarray(np.concatenate(tiles, axis=1)).save(OUT / "strip.png")
print("wrote", OUT / "strip.png")
