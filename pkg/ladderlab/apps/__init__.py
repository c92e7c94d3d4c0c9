# Django apps package init
