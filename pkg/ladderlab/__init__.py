# LadderLab project package
