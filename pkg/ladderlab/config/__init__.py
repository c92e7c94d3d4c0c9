# Django config package init
