"""The classifier under test: two conv+pool stages and one linear head.

On 28x28 input the spatial chain is 28 -> 24 -> 12 -> 8 -> 4, so the
head sees 20 * 4 * 4 = 320 features.  The 5x5 kernels are what make the
chain land on 4; the head width is pinned by a shape test.
"""

from __future__ import annotations

import torch
from torch import nn
from torch.nn import functional as F


class OcrNet(nn.Module):
    def __init__(self, num_classes: int = 10):
        super().__init__()
        self.conv1 = nn.Conv2d(1, 10, kernel_size=5, stride=1)
        self.conv2 = nn.Conv2d(10, 20, kernel_size=5, stride=1)
        self.fc = nn.Linear(20 * 4 * 4, num_classes)

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        x = F.max_pool2d(F.relu(self.conv1(x)), 2)
        x = F.max_pool2d(F.relu(self.conv2(x)), 2)
        return self.fc(torch.flatten(x, 1))
